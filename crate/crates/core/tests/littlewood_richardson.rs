use bkschubert::eigencone::lr_coefficient;
use proptest::prelude::*;

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Standard tableaux count by the hook length formula.
fn hooks(lambda: &[usize]) -> u128 {
    let n: usize = lambda.iter().sum();
    let mut num: u128 = (1..=n as u128).product();
    let mut den: u128 = 1;
    for (i, &row) in lambda.iter().enumerate() {
        for j in 0..row {
            let below = lambda[i + 1..].iter().filter(|&&r| r > j).count();
            den *= (row - j + below) as u128;
        }
    }
    num /= den;
    num
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn partition() -> impl Strategy<Value = Vec<usize>> {
    (0usize..=5).prop_flat_map(|n| {
        let all = partitions(n, n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coefficients_count_standard_tableaux(lambda in partition(), mu in partition()) {
        let (a, b) = (lambda.iter().sum::<usize>(), mu.iter().sum::<usize>());
        let lhs: u128 = partitions(a + b, a + b)
            .iter()
            .map(|nu| u128::from(lr_coefficient(&lambda, &mu, nu)) * hooks(nu))
            .sum();
        prop_assert_eq!(lhs, binomial((a + b) as u128, a as u128) * hooks(&lambda) * hooks(&mu));
    }

    #[test]
    fn coefficients_are_symmetric(lambda in partition(), mu in partition()) {
        let n = lambda.iter().sum::<usize>() + mu.iter().sum::<usize>();
        for nu in partitions(n, n) {
            prop_assert_eq!(lr_coefficient(&lambda, &mu, &nu), lr_coefficient(&mu, &lambda, &nu));
        }
    }
}

#[test]
fn known_values() {
    assert_eq!(lr_coefficient(&[2, 1], &[2, 1], &[3, 2, 1]), 2);
    assert_eq!(lr_coefficient(&[1], &[1], &[2]), 1);
    assert_eq!(lr_coefficient(&[1], &[1], &[1, 1]), 1);
    assert_eq!(lr_coefficient(&[2], &[2], &[2, 1, 1]), 0);
    assert_eq!(lr_coefficient(&[], &[3, 1], &[3, 1]), 1);
}
