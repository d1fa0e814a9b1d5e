//! Lifting problems, fibration classifiers and lifting constructions.

mod classify;
mod groupoid;
mod jardine;
mod problem;

pub use classify::{
    check_inclusion, classify_sset_fibration, simplex_map, test_family, FibrationMode, FibrationReport, Inclusion,
    InclusionCheck, LiftWitness,
};
pub use groupoid::{strictify_lift, weak_lift_space, GpdLiftingProblem, LaxLift, StrictifiedLift, WeakLiftSpace};
pub use jardine::{jardine_criterion, JardineConclusion, JardineReport};
pub use problem::{
    all_strict_solutions, find_fiberwise_homotopy, solve_strict, solve_weak, verify_weak_solution, Cylinder,
    LiftingProblem, WeakSolution,
};
