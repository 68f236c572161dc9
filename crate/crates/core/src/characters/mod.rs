//! Irreducible character values of `S_n` in exact arithmetic.

mod cache;
mod formulas;
mod mn;
mod table;
mod value;

pub use cache::{ordering_fingerprint, MemoCache, DEFAULT_CAPACITY};
pub use formulas::{class_size, class_size_z, conjugate_sign, dimension};
pub use mn::{mn_char, mn_char_cycle_type, mn_char_smallest_first};
pub use table::{char_table, CharTable};
pub use value::CharValue;
