//! Exact symbolic toolkit for contact curves in P³, null curves in the Klein
//! quadric Q³ ⊂ P⁴ and minimal surfaces with embedded planar ends.

pub mod exactnum;
pub mod poly;
pub mod curves;
pub mod weier;
pub mod classify;
