"""Lifted CTL model checking for featured transition systems"""
__version__ = "1.0.0"
