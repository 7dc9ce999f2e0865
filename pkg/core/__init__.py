# Core package (Linalg, Quantum, Relations, Sampling, Search, Execution)
