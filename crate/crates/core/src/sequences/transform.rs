//! Binomial inversion and the chain sums it turns into under `1/k^m`
//! weighting.
//!
//! Sequences are 1-indexed in the mathematics; slices here store `a_1` at
//! index 0.

use num_bigint::BigInt;

use crate::factorial::binomial_q;
use crate::poly::PolyLambda;
use crate::rational::Rational;

/// `b_n = Σ_{k=1}^n binom(n, k)(−1)^{k−1} a_k`. The transform is an involution.
pub fn binomial_inversion(a: &[PolyLambda]) -> Vec<PolyLambda> {
    weighted_inversion(a, 0)
}

/// `Σ_{k=1}^n binom(n, k)(−1)^{k−1} a_k / k^m` for each `n = 1..=len`.
pub fn weighted_inversion(a: &[PolyLambda], m: u32) -> Vec<PolyLambda> {
    let weighted: Vec<PolyLambda> = a
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let k = Rational::from_integer(i as i64 + 1);
            let w = k.pow(-(m as i32)).expect("k ≥ 1") * Rational::sign_power(i as u64);
            x.scale(&w)
        })
        .collect();
    (1..=a.len() as u64)
        .map(|n| {
            (1..=n)
                .map(|k| weighted[k as usize - 1].scale(&binomial_q(n, k)))
                .sum()
        })
        .collect()
}

/// `Σ_{1≤k₁≤…≤k_m≤n} b_{k₁}/(k₁···k_m)` for each `n = 1..=len`.
///
/// Computed in `O(len·m)` as `m` passes of "divide by the index, then take
/// prefix sums". `m = 0` returns `b` unchanged.
pub fn chain_sum(b: &[PolyLambda], m: u32) -> Vec<PolyLambda> {
    let mut cur = b.to_vec();
    for _ in 0..m {
        let mut acc = PolyLambda::zero();
        for (i, slot) in cur.iter_mut().enumerate() {
            acc += &slot.scale(&Rational::new(1, i as i64 + 1));
            *slot = acc.clone();
        }
    }
    cur
}

/// Same as [`chain_sum`] by literally enumerating every weakly increasing
/// index tuple. Exponential in `m`; kept as an independent check.
pub fn chain_sum_enumerated(b: &[PolyLambda], m: u32) -> Vec<PolyLambda> {
    (1..=b.len()).map(|n| chain_sum_enumerated_at(b, n, m)).collect()
}

/// The `n`-th entry of [`chain_sum_enumerated`] alone.
pub(crate) fn chain_sum_enumerated_at(b: &[PolyLambda], n: usize, m: u32) -> PolyLambda {
    if m == 0 {
        return b[n - 1].clone();
    }
    // Sum 1/(k₁···k_m) per k₁ over the chains, then weight b once per k₁.
    let mut weights = vec![Rational::zero(); n];
    let mut chain = vec![1usize; m as usize];
    loop {
        let denom: BigInt = chain.iter().map(|&k| BigInt::from(k)).product();
        weights[chain[0] - 1] += &Rational::from_bigint(denom).recip().expect("indices are positive");
        if !next_chain(&mut chain, n) {
            break;
        }
    }
    weights.iter().zip(b).map(|(w, x)| x.scale(w)).sum()
}

/// Advances `1 ≤ k₁ ≤ … ≤ k_m ≤ n` to the next tuple in lexicographic order.
fn next_chain(chain: &mut [usize], n: usize) -> bool {
    let Some(pos) = chain.iter().rposition(|&k| k < n) else {
        return false;
    };
    let v = chain[pos] + 1;
    for k in &mut chain[pos..] {
        *k = v;
    }
    true
}

/// Both sides of the weighted binomial-inversion identity for a sequence `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedTransform {
    /// `b = binomial_inversion(a)`.
    pub inverted: Vec<PolyLambda>,
    /// `Σ_k binom(n,k)(−1)^{k−1} a_k / k^m`.
    pub direct: Vec<PolyLambda>,
    /// `Σ_{1≤k₁≤…≤k_m≤n} b_{k₁}/(k₁···k_m)`.
    pub chain: Vec<PolyLambda>,
}

/// Evaluates the weighted inversion of `a` directly and as a chain sum over
/// its binomial inversion. The two agree for every sequence and `m ≥ 1`.
pub fn iterated_weighted_transform(a: &[PolyLambda], m: u32) -> WeightedTransform {
    let inverted = binomial_inversion(a);
    let direct = weighted_inversion(a, m);
    let chain = chain_sum(&inverted, m);
    WeightedTransform { inverted, direct, chain }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn consts(v: &[i64]) -> Vec<PolyLambda> {
        v.iter().map(|&x| PolyLambda::from(x)).collect()
    }

    #[test]
    fn unit_impulse() {
        let a = consts(&[1, 0, 0, 0, 0]);
        assert_eq!(binomial_inversion(&a), consts(&[1, 2, 3, 4, 5]));
    }

    #[test]
    fn hand_enumerated_chain() {
        let a = consts(&[1, 0]);
        let w = iterated_weighted_transform(&a, 2);
        assert_eq!(w.direct[1], PolyLambda::from(2));
        // chains (1,1), (1,2), (2,2) over b = [1, 2]: 1 + 1/2 + 2/4
        assert_eq!(w.chain[1], PolyLambda::from(2));
        assert_eq!(chain_sum_enumerated(&w.inverted, 2)[1], PolyLambda::from(2));
    }

    #[test]
    fn chain_enumeration_counts() {
        // with b ≡ 1 and all weights dropped, chain count is binom(n+m−1, m)
        let mut chain = vec![1usize; 3];
        let mut count = 1;
        while next_chain(&mut chain, 5) {
            count += 1;
        }
        assert_eq!(count, 35);
    }

    #[test]
    fn chain_sum_m_zero_is_identity() {
        let b = consts(&[3, 1, 4]);
        assert_eq!(chain_sum(&b, 0), b);
        assert_eq!(chain_sum_enumerated(&b, 0), b);
    }

    fn arb_seq() -> impl Strategy<Value = Vec<PolyLambda>> {
        prop::collection::vec((-20i64..=20, 1i64..=9), 1..=12).prop_map(|v| {
            v.into_iter().map(|(n, d)| PolyLambda::constant(Rational::new(n, d))).collect()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn inversion_is_involution(a in arb_seq()) {
            prop_assert_eq!(binomial_inversion(&binomial_inversion(&a)), a);
        }

        #[test]
        fn dp_matches_enumeration(b in arb_seq(), m in 1u32..=3) {
            prop_assert_eq!(chain_sum(&b, m), chain_sum_enumerated(&b, m));
        }

        #[test]
        fn weighted_inversion_is_chain_sum(a in arb_seq(), m in 1u32..=3) {
            let w = iterated_weighted_transform(&a, m);
            prop_assert_eq!(&w.direct, &w.chain);
        }
    }
}
