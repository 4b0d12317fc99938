"""
File adapters: signal CSV, TFR1 container, metric CSVs.
"""
