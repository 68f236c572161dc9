use num_bigint::BigInt;

use super::CharValue;
use crate::partitions::Partition;

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

/// `f^λ = |λ|! / ∏ hook lengths`, the degree of the irreducible character.
pub fn dimension(lambda: &Partition) -> CharValue {
    let hooks = lambda
        .hook_lengths()
        .into_iter()
        .fold(BigInt::from(1), |acc, h| acc * h);
    CharValue::from_bigint(factorial(lambda.size()) / hooks)
}

/// Centralizer order `z_μ = ∏_k k^{m_k} m_k!`; the class of `μ` has `n!/z_μ` elements.
pub fn class_size_z(mu: &Partition) -> CharValue {
    let mut z = BigInt::from(1);
    let parts = mu.parts();
    let mut i = 0;
    while i < parts.len() {
        let k = parts[i];
        let m = parts[i..].iter().take_while(|&&p| p == k).count();
        z *= BigInt::from(k).pow(m as u32) * factorial(m);
        i += m;
    }
    CharValue::from_bigint(z)
}

/// Number of permutations in the class of `μ`, `n!/z_μ`.
pub fn class_size(mu: &Partition) -> CharValue {
    CharValue::from_bigint(factorial(mu.size()) / class_size_z(mu).to_bigint())
}

/// The sign character on the class `μ`: `(-1)^(|μ| - ℓ(μ))`.
pub fn conjugate_sign(mu: &Partition) -> i32 {
    if (mu.size() - mu.len()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(&Partition::row(9)), 1);
        assert_eq!(dimension(&p(&[2, 1])), 2);
        // 15! / (9·7·5·3·1 · 7·5·3·1 · 5·3·1 · 3·1 · 1) = 1307674368000 / 4465125
        assert_eq!(dimension(&p(&[5, 4, 3, 2, 1])), 292864);
        assert_eq!(dimension(&Partition::empty()), 1);
    }

    #[test]
    fn centralizer_examples() {
        assert_eq!(class_size_z(&Partition::column(6)), 720);
        assert_eq!(class_size_z(&Partition::row(6)), 6);
        assert_eq!(class_size_z(&p(&[2, 1])), 2);
        assert_eq!(class_size(&p(&[2, 1])), 3);
    }

    #[test]
    fn sign_examples() {
        assert_eq!(conjugate_sign(&Partition::column(5)), 1);
        assert_eq!(conjugate_sign(&p(&[2])), -1);
        assert_eq!(conjugate_sign(&p(&[5, 4, 1])), -1);
    }
}
