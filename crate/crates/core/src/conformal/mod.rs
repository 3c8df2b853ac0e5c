//! Schwarz-Christoffel maps: parameter problem, evaluation, inversion and
//! composite-map derivative.
