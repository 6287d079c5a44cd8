"""Cograph algorithms on cotrees and parse trees."""
