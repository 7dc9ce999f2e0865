"""
Command-line harness: instance files, verification, sweeps, gap search and
the degenerate-case demo.
"""
