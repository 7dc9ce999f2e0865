"""
Shared helpers for the command-line harness: environment parsing, output
formatting and the exit-code exception handler.
"""
