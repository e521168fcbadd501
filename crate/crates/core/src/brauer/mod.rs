//! `Ψ`, `Ψ(G)`, the evaluation map and the assembly of Brauer groups of
//! moduli stacks and regularly stable moduli spaces.

mod classify;
mod ev;
mod psi;
mod report;
mod twisted;

pub use classify::{classify, kernel_index, stack_descent, GroupKind};
pub use ev::{coker_ev, ev, ev_certificate, evaluation, gamma, h2_gamma, pi1, Evaluation};
pub use psi::{psi, psi_g, PsiGroup, PsiSubgroup};
pub use report::{
    br_moduli, br_stack, cross_check, Assembly, BrauerReport, CheckStatus, ConsistencyReport, Order, Piece, Split,
};
pub use twisted::{br_twisted_sc, min_descending_power, sp_local_factoriality};
