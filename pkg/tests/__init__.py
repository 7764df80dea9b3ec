"""Tests package for AURA Research Agent."""
