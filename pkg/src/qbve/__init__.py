"""Quantum-circuit models for barotropic vorticity dynamics on the sphere.

Subpackages cover the statevector simulator (:mod:`qbve.qsim`), the
quantum model (:mod:`qbve.qnn`), exact higher-order differentiation
(:mod:`qbve.diff`), the vorticity-equation physics (:mod:`qbve.bve`),
the spectral reference solver (:mod:`qbve.sem`), data handling
(:mod:`qbve.data`), training (:mod:`qbve.train`), figures of merit
(:mod:`qbve.fom`) and the command line interface (:mod:`qbve.cli`).
"""

__version__ = "0.1.0"
