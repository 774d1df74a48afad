//! Continuous gradient-based optimization of mixed-integer travelling-salesman
//! problems, with two concrete backends: a static 14-point Euclidean benchmark
//! and a J2-perturbed multiple-debris-rendezvous tour.
//!
//! Discrete target IDs are replaced by Gaussian "expected target" design
//! variables. At each node of the sequence the most probable unvisited
//! candidate under the expected-target belief is selected, the transfer cost
//! is scored against a conditioned cost belief, and the whole sequence is
//! penalized through chi-square slack constraints (or scored by a MAP
//! objective). A box-constrained quasi-Newton optimizer searches the
//! continuous design vector.
//!
//! Module map:
//! - [`gaussian`] — belief arithmetic: densities, conditioning, chi-square
//!   quantiles, finite-difference Jacobians, scaled unscented transform.
//! - [`orbital`] — Keplerian elements, J2 secular rates, Cartesian J2 ODE
//!   validation propagator, near-circular impulsive transfer costs.
//! - [`engine`] — the sequence evaluation loop: prediction, selection,
//!   conditioning, penalties, and the design-vector layout.
//! - [`optim`] — projected quasi-Newton minimization with finite-difference
//!   gradients and a multi-start controller.
//! - [`static_tsp`] — the 14-point benchmark backend plus exact (Held-Karp)
//!   and simulated-annealing baselines.
//! - [`debris`] — the GTOC-9 style debris-rendezvous backend with the
//!   two-step fixed-ToF / refine-ToF strategy.

pub mod debris;
pub mod engine;
pub mod gaussian;
pub mod optim;
pub mod orbital;
pub mod static_tsp;
