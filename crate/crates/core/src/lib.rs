//! Characteristic-number calculus, fundamental-group bookkeeping and
//! construction planning for symplectic 4- and 6-manifolds.

pub mod blocks;
pub mod calculus;
pub mod cli;
pub mod charnum;
pub mod fpgroup;
pub mod planner;
