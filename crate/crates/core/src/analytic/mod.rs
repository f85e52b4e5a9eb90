//! Exact distinct-part counts and the real-analytic side: `I_1` and its
//! elementary bounds, the error envelope for `q(n)`, circle-method main
//! terms and the Laurent limits that feed them.
//!
//! Anything that grows like `e^x` is returned as a [`LogReal`].

mod bessel;
mod counts;
mod logreal;
mod wright;

pub use bessel::{
    bb_envelope, bessel_bounds, bessel_i1, expansion_error_bounds, mu, q_lower_bound, BbEnvelope,
    BESSEL_MAX_ARG,
};
pub use counts::{
    check_ens_sandwich, distinct_counts, distinct_counts_pentagonal, DistinctCountTable,
    SandwichReport,
};
pub use logreal::LogReal;
pub use wright::{laurent_limit, wright_main, AsymptoticParams, LaurentName};
