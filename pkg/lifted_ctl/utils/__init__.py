"""Utility modules for the lifted CTL checker"""
