use proptest::prelude::*;
use signpart::characters::{
    char_table, class_size_z, conjugate_sign, dimension, mn_char, mn_char_smallest_first, CharValue,
    MemoCache,
};
use signpart::partitions::{partitions_of, Partition};

fn int(v: &CharValue) -> i128 {
    v.to_i64().expect("small values") as i128
}

fn factorial(n: usize) -> i128 {
    (1..=n as i128).product()
}

/// `z_μ = ∏ i^{m_i} m_i!`, computed directly from the multiplicities.
fn z(mu: &Partition) -> i128 {
    let mut out = 1i128;
    for i in 1..=mu.size() {
        let m = mu.parts().iter().filter(|&&p| p == i).count();
        out *= (i as i128).pow(m as u32) * factorial(m);
    }
    out
}

#[test]
fn both_peeling_orders_agree() {
    let cache = MemoCache::new();
    for n in 0..=12 {
        for lambda in partitions_of(n) {
            for mu in partitions_of(n) {
                assert_eq!(
                    mn_char(&lambda, &mu, &cache).unwrap(),
                    mn_char_smallest_first(&lambda, &mu).unwrap(),
                    "λ = {lambda}, μ = {mu}"
                );
            }
        }
    }
}

#[test]
fn conjugation_twists_by_the_sign_character() {
    let cache = MemoCache::new();
    for n in 0..=12 {
        for lambda in partitions_of(n) {
            let conj = lambda.conjugate();
            for mu in partitions_of(n) {
                let sign = (-1i64).pow(((n - mu.len()) % 2) as u32);
                assert_eq!(conjugate_sign(&mu) as i64, sign);
                let a = mn_char(&conj, &mu, &cache).unwrap();
                let b = mn_char(&lambda, &mu, &cache).unwrap();
                assert_eq!(int(&a), sign as i128 * int(&b), "λ = {lambda}, μ = {mu}");
            }
        }
    }
}

#[test]
fn identity_column_is_the_hook_length_dimension() {
    let cache = MemoCache::new();
    for n in 0..=12 {
        let identity = Partition::column(n);
        let mut square_sum = 0i128;
        for lambda in partitions_of(n) {
            let d = dimension(&lambda);
            assert_eq!(mn_char(&lambda, &identity, &cache).unwrap(), d, "λ = {lambda}");
            square_sum += int(&d) * int(&d);
        }
        assert_eq!(square_sum, factorial(n));
    }
}

#[test]
fn centralizer_orders() {
    for n in 0..=14 {
        let mut classes = 0i128;
        for mu in partitions_of(n) {
            assert_eq!(int(&class_size_z(&mu)), z(&mu), "μ = {mu}");
            classes += factorial(n) / z(&mu);
        }
        assert_eq!(classes, factorial(n));
    }
}

#[test]
fn column_orthogonality() {
    let cache = MemoCache::new();
    for n in 0..=10 {
        let t = char_table(n, &cache).unwrap();
        for (j, mu) in t.cols.iter().enumerate() {
            for (k, nu) in t.cols.iter().enumerate() {
                let sum: i128 = t.values.iter().map(|row| int(&row[j]) * int(&row[k])).sum();
                let expected = if j == k { z(mu) } else { 0 };
                assert_eq!(sum, expected, "μ = {mu}, ν = {nu}");
            }
        }
    }
}

#[test]
fn row_orthogonality() {
    let cache = MemoCache::new();
    for n in 0..=10 {
        let t = char_table(n, &cache).unwrap();
        let weights: Vec<i128> = t.cols.iter().map(|mu| factorial(n) / z(mu)).collect();
        for (i, lambda) in t.rows.iter().enumerate() {
            for (k, rho) in t.rows.iter().enumerate() {
                let sum: i128 = (0..t.cols.len())
                    .map(|j| weights[j] * int(&t.values[i][j]) * int(&t.values[k][j]))
                    .sum();
                let expected = if i == k { factorial(n) } else { 0 };
                assert_eq!(sum, expected, "λ = {lambda}, ρ = {rho}");
            }
        }
    }
}

#[test]
fn table_entries_match_single_evaluations() {
    let cache = MemoCache::new();
    let t = char_table(9, &cache).unwrap();
    let fresh = MemoCache::new();
    for (i, lambda) in t.rows.iter().enumerate() {
        for (j, mu) in t.cols.iter().enumerate() {
            assert_eq!(t.values[i][j], mn_char(lambda, mu, &fresh).unwrap());
        }
    }
}

#[test]
fn big_values_stay_exact() {
    // degrees of S_25 fit in an i64, their squares do not
    let cache = MemoCache::new();
    let lambda = Partition::new(vec![7, 5, 4, 3, 2, 2, 1, 1]).unwrap();
    let d = mn_char(&lambda, &Partition::column(25), &cache).unwrap();
    assert_eq!(d, dimension(&lambda));
    let square = d.clone() * d.clone();
    assert_eq!(square.to_bigint(), d.to_bigint() * d.to_bigint());
    assert!(square.to_i64().is_err());
}

fn same_size_pair(max_n: usize) -> impl Strategy<Value = (Partition, Partition)> {
    (0..=max_n).prop_flat_map(|n| {
        let all: Vec<Partition> = partitions_of(n).collect();
        let count = all.len();
        (0..count, 0..count).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn warm_and_cold_caches_agree((lambda, mu) in same_size_pair(18)) {
        static WARM: std::sync::OnceLock<MemoCache> = std::sync::OnceLock::new();
        let warm = WARM.get_or_init(MemoCache::new);
        let cold = MemoCache::new();
        prop_assert_eq!(mn_char(&lambda, &mu, warm).unwrap(), mn_char(&lambda, &mu, &cold).unwrap());
    }

    #[test]
    fn orders_agree_random((lambda, mu) in same_size_pair(20)) {
        prop_assert_eq!(
            mn_char(&lambda, &mu, &MemoCache::new()).unwrap(),
            mn_char_smallest_first(&lambda, &mu).unwrap()
        );
    }
}
