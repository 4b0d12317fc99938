"""
Domain models for signals, analysis frames and time-frequency results.
"""
