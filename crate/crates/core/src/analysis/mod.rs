//! Search, state-space exploration and property checks over cdr and cds.

pub mod search;
pub mod space;
pub mod theorems;
pub mod verify;

pub use search::{
    cdr_sortable_criterion, cdr_sortable_search, cds_run, cds_sortable_greedy, extend_to_total,
    extend_to_total_in, greedy_safe_total_sequence, greedy_safe_total_sequence_in,
    indiscriminate_cdr_run, reverse_cdr_sortable_search, total_sequence_lengths, CdsRun,
    PointerSequence, SearchOptions, SearchOutcome, Selection, SequenceKind, DEFAULT_BUDGET,
};
pub use space::StateSpace;
pub use theorems::{
    cdr_steps, cdr_steps_after, enumerate_cdr_fixed_points, maximal_sequence_lengths, parity,
    verify_rescue, FixedPoints, LengthMultiset, Parity, RescueEntry, RescueReport, StepsReport,
};
pub use verify::{
    check, run as run_verify, sweep_inputs, Outcome, Property, Record, Report, Sweep, Tally,
    VerifyConfig,
};
