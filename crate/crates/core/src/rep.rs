//! Dimension oracles for irreducible SL_{n+1}-modules.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::inequalities::Weight;

/// Weyl's product formula ∏_{i<j} (λ_i + ⋯ + λ_{j−1} + j − i)/(j − i).
pub fn weyl_dimension(weight: &Weight) -> BigInt {
    let n = weight.rank();
    let lam = weight.coeffs();
    let mut prod = BigRational::one();
    for i in 1..=n + 1 {
        for j in i + 1..=n + 1 {
            let num: i64 = lam[i - 1..j - 1].iter().sum::<i64>() + (j - i) as i64;
            prod *= BigRational::new(num.into(), ((j - i) as i64).into());
        }
    }
    debug_assert!(prod.is_integer());
    prod.to_integer()
}

/// Counts integer interlacing triangles below the top row (λ_1 + ⋯ + λ_n, …, λ_n, 0).
pub fn gt_pattern_count(weight: &Weight) -> u64 {
    let n = weight.rank();
    let top: Vec<i64> = (0..=n).map(|j| weight.coeffs()[j..].iter().sum()).collect();
    let mut memo = HashMap::new();
    below(&top, &mut memo)
}

fn below(row: &[i64], memo: &mut HashMap<Vec<i64>, u64>) -> u64 {
    if row.len() <= 1 {
        return 1;
    }
    if let Some(&c) = memo.get(row) {
        return c;
    }
    let mut next = vec![0; row.len() - 1];
    let total = fill(row, &mut next, 0, memo);
    memo.insert(row.to_vec(), total);
    total
}

fn fill(row: &[i64], next: &mut Vec<i64>, j: usize, memo: &mut HashMap<Vec<i64>, u64>) -> u64 {
    if j == next.len() {
        return below(&next.clone(), memo);
    }
    (row[j + 1]..=row[j])
        .map(|x| {
            next[j] = x;
            fill(row, next, j + 1, memo)
        })
        .sum()
}
