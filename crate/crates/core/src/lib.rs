//! Autotopisms of Latin squares: necessary conditions, explicit witness
//! constructions, contour expansion and exact orbit search.

pub mod conditions;
pub mod construct;
pub mod contour;
pub mod latin;
pub mod perm;
pub mod search;
