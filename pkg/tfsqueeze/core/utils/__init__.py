"""
Utility modules for tfsqueeze.
"""
