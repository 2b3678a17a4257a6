"""Exact Holant and #CSP evaluation, classification and gadget verification."""
