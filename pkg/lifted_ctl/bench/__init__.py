"""
Bench module for the lifted CTL checker
Bundled models, model generators and benchmark data
"""
