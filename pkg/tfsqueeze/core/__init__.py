"""
Core package: models, workflows, services and infrastructure.
"""
