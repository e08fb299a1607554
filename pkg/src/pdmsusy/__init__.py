"""Position-dependent-mass Hamiltonians: ordering classification, exact spectra,
supersymmetric factorization and a finite-difference eigensolver."""
