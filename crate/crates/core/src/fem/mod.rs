//! Equilateral meshes, high-order Lagrange spaces and pencil assembly.
