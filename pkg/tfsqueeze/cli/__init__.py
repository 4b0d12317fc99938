"""
Command-line interface for tfsqueeze.
"""
