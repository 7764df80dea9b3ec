"""
Command modules for the lifted CTL checker
Each module registers one subcommand and returns an exit status
"""

from . import bench, check, game, generate, oracle

COMMANDS = (check, oracle, game, bench, generate)

__all__ = ['COMMANDS', 'bench', 'check', 'game', 'generate', 'oracle']
