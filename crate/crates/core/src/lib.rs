//! Exact symbolic computation for `U_q(gl_{n+1})`, `U_q(sl_{n+1})` and the
//! quantized Weyl algebra `A^q_{n+1}`, together with completely pointed
//! weight modules and their classification data.

pub mod classify;
pub mod grammar;
pub mod modrep;
pub mod par;
pub mod report;
pub mod rootsys;
pub mod scalars;
pub mod uq;
pub mod weylq;
