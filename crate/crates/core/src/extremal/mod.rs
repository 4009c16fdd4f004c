//! Extremal subgraphs: quasi-balls, puffed balls, the comparison sequence,
//! equality cases of the Euclidean vertex bounds and triangulation transfers.

mod proposition;
mod puffed;
mod recurrence;
mod triangulation;
mod weil;

pub use crate::graph::ops::quasi_ball;
pub use proposition::{lemma_check, proposition_check, Hypothesis, LemmaReport, PropositionReport};
pub use puffed::{delta_sequence, puffed_ball, DeltaSequence, PuffedBall, PuffedSequence};
pub use recurrence::{solve_recurrence, AlphaValue, RecurrenceSeq};
pub use triangulation::{
    extract_disk, j1_bound, random_triangulation, transfer_triangulation, triangulation_j1_bounds, GrowthCheck,
    J1Report, J1Row, TransferMode, TransferReport, GROWTH_TOLERANCE,
};
pub use weil::{
    equality_admissible, equality_subgraph, euclidean_p, weil_bound, weil_scan, weil_verify, EqualityOutcome, WeilReport,
    WeilScan,
};
