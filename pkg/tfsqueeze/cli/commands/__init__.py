"""
Subcommands: gen, transform, metrics, render.
"""
