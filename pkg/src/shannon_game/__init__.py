"""Exact solving and theorem-based reduction of the Shannon game on graphs."""
