//! Regenerates `src/witness/table_data.rs`.
//!
//!     cargo run --release -p signpart --example generate_exceptional_table > crates/core/src/witness/table_data.rs

use signpart::witness::{exceptional_alphas, search_witness};
use signpart::MemoCache;

fn list(parts: &[usize]) -> String {
    let items: Vec<String> = parts.iter().map(usize::to_string).collect();
    format!("&[{}]", items.join(", "))
}

fn main() {
    let cache = MemoCache::new().with_capacity_n(64);
    println!("// @generated by examples/generate_exceptional_table.rs; do not edit by hand.");
    println!();
    println!("/// `(α, β)` pairs: `β` is the lexicographically least witness for `α`.");
    println!("pub(super) static EXCEPTIONAL: &[(&[usize], &[usize])] = &[");
    for alpha in exceptional_alphas() {
        let beta = search_witness(&alpha, &cache).expect("every exceptional α has a witness");
        eprintln!("{alpha} -> {beta}");
        println!("    ({}, {}),", list(alpha.parts()), list(beta.parts()));
    }
    println!("];");
}
