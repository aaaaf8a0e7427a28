"""Checkers for the two-column identities, log-convexity statements and table reproductions."""
