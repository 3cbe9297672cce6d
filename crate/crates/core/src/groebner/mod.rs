//! Gröbner bases, normal forms, ideal membership and elimination.

mod budget;
mod engine;
mod ideal;

pub use budget::Budget;
pub use engine::GbStats;
pub use ideal::{
    buchberger, buchberger_with_budget, eliminate, ideal_equal, ideal_equal_with_budget,
    ideal_membership, is_groebner_basis, normal_form, GbCertificate, GbCheck, GroebnerBasis, Ideal,
    PairCertificate,
};
