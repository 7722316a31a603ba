//! Cloud-fog workflow scheduling laboratory.
//!
//! Models scientific workflows as DAGs, simulates their execution on a
//! three-tier (end device / fog / cloud) resource pool, scores schedules
//! with a weighted-sum objective over makespan, cost, and energy, and
//! searches for good task-to-resource mappings with seeded population-based
//! optimizers (PSO, GA, DE, GA-PSO) plus an exhaustive oracle for small
//! instances.

pub mod infra;
pub mod objective;
pub mod optim;
pub mod report;
pub mod sim;
pub mod workflow;
