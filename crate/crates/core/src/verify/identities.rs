//! The registered identities. Each one expands into checks over the grid
//! described by a [`SuiteConfig`]; a check is a pair of polynomials that
//! must be equal.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::factorial::{binom_poly, binomial, factorial_q, lambda_plus};
use crate::gf;
use crate::poly::PolyLambda;
use crate::rational::Rational;
use crate::sequences::{self as seq, StirlingVariant};
use crate::series::TruncatedSeries;

use super::config::SuiteConfig;
use super::report::{Cell, Polarity};

/// Length of the random sequences fed to the transform identities.
pub const RANDOM_SEQ_LEN: usize = 12;

/// Literal chain enumeration is skipped above this many chains per cell.
pub const ENUMERATION_LIMIT: u64 = 50_000;

pub(super) enum Outcome {
    Check { cell: Cell, lhs: PolyLambda, rhs: PolyLambda },
    Skip { cell: Cell, reason: String },
}

fn check(cell: Cell, lhs: PolyLambda, rhs: PolyLambda) -> Outcome {
    Outcome::Check { cell, lhs, rhs }
}

pub struct Identity {
    pub id: &'static str,
    pub description: &'static str,
    pub expected: Polarity,
    /// When false the checks are λ-free and no point checks are emitted.
    pub lambda_dependent: bool,
    pub(super) run: fn(&SuiteConfig) -> Vec<Outcome>,
}

/// Every identity, sorted by id.
pub fn registry() -> &'static [Identity] {
    &REGISTRY
}

static REGISTRY: [Identity; 22] = [
    Identity {
        id: "classical_limits",
        description: "λ = 0 reproduces classical harmonic, derangement, Stirling and polylogarithm values",
        expected: Polarity::Pass,
        lambda_dependent: false,
        run: classical_limits,
    },
    Identity {
        id: "conclusion_K_single_sum",
        description: "single binomial sum with weight 1/k^m equals the K generating-function coefficient",
        expected: Polarity::Pass,
        lambda_dependent: true,
        run: conclusion_k_single_sum,
    },
    Identity {
        id: "cor_2_2",
        description: "(−1)^{n−1}/n!·((λ−1)_{n−1} − ⟨λ+1⟩_{n−1}) equals the truncated binomial sum",
        expected: Polarity::Pass,
        lambda_dependent: true,
        run: cor_2_2,
    },
    Identity {
        id: "eq_13_stirling_gf",
        description: "basis-change Stirling numbers match the EGF (−log_λ(1−t))^k/k!",
        expected: Polarity::Pass,
        lambda_dependent: true,
        run: eq_13,
    },
    Identity {
        id: "eq_15_derangement_gf",
        description: "degenerate derangement sum matches the EGF e_λ^{−1}(t)/(1−t)",
        expected: Polarity::Pass,
        lambda_dependent: true,
        run: eq_15,
    },
    Identity {
        id: "eq_18_recurrence",
        description: "H_{n,λ} − H_{n−1,λ} = (−1)^{n−1} binom(λ−1, n−1)/n",
        expected: Polarity::Pass,
        lambda_dependent: true,
        run: eq_18,
    },
    Identity {
        id: "eq_2_classical_gf",
        description: "log(1/(1−t))/(1−t) generates H_n; matches the degenerate series at λ = 0",
        expected: Polarity::Pass,
        lambda_dependent: false,
        run: eq_2,
    },
    Identity {
        id: "eq_4_reversion",
        description: "closed-form log_λ equals the reversion of e_λ − 1; both compositions give t",
        expected: Polarity::Pass,
        lambda_dependent: true,
        run: eq_4,
    },
    Identity {
        id: "eq_6_gf_vs_def",
        description: "log_{−λ}(1/(1−t))/(1−t) generates the defining sum of H_{n,λ}",
        expected: Polarity::Pass,
        lambda_dependent: true,
        run: eq_6,
    },
    Identity {
        id: "eq_8_lah_gf",
        description: "closed-form Lah numbers match the EGF (t/(1−t))^k/k!",
        expected: Polarity::Pass,
        lambda_dependent: false,
        run: eq_8,
    },
    Identity {
        id: "lemma_2_4",
        description: "Σ binom(n,k)(−1)^{k−1} a_k/k = Σ_{k≤n} b_k/k where b is the binomial inversion of a",
        expected: Polarity::Pass,
        lambda_dependent: true,
        run: lemma_2_4,
    },
    Identity {
        id: "remark_2_11_telescoping",
        description: "Li_{m,λ} coefficients are the differences H^{(m)}_{n,λ} − H^{(m)}_{n−1,λ}",
        expected: Polarity::Pass,
        lambda_dependent: true,
        run: remark_2_11,
    },
    Identity {
        id: "thm_2_1",
        description: "H_{n,λ} = Σ binom(n,k)(−1)^{k−1}/k · binom(λ+k−1, k−1)",
        expected: Polarity::Pass,
        lambda_dependent: true,
        run: thm_2_1,
    },
    Identity {
        id: "thm_2_10_as_derived",
        description: "H_{n,λ} = (1/n!) Σ k (1)_{k−1,−λ} [n,k]_λ",
        expected: Polarity::Pass,
        lambda_dependent: true,
        run: thm_2_10_as_derived,
    },
    Identity {
        id: "thm_2_10_as_printed",
        description: "H_{n,λ} = Σ k (1)_{k,−λ} [n,k]_λ (known to fail from n = 2)",
        expected: Polarity::Fail,
        lambda_dependent: true,
        run: thm_2_10_as_printed,
    },
    Identity {
        id: "thm_2_12",
        description: "H_{n,λ} through degenerate derangement numbers",
        expected: Polarity::Pass,
        lambda_dependent: true,
        run: thm_2_12,
    },
    Identity {
        id: "thm_2_3_involution",
        description: "binomial inversion is an involution; it maps binom(λ+k−1,k−1)/k to H_{n,λ}",
        expected: Polarity::Pass,
        lambda_dependent: true,
        run: thm_2_3,
    },
    Identity {
        id: "thm_2_5",
        description: "weighted inversion with 1/k^m equals the m-fold chain sum of the inverted sequence",
        expected: Polarity::Pass,
        lambda_dependent: false,
        run: thm_2_5,
    },
    Identity {
        id: "thm_2_6",
        description: "Σ binom(n,k)(−1)^{k−1}/k^m binom(λ+k−1,k−1) equals the chain sum over binom(λ−1,k₁−1)",
        expected: Polarity::Pass,
        lambda_dependent: true,
        run: thm_2_6,
    },
    Identity {
        id: "thm_2_7_vs_def_gf",
        description: "chain-sum and binomial forms of K^{(m)}_{n,λ} match its generating function",
        expected: Polarity::Pass,
        lambda_dependent: true,
        run: thm_2_7,
    },
    Identity {
        id: "thm_2_8",
        description: "Lah-number form of K^{(m)}_{n,λ} matches its generating function",
        expected: Polarity::Pass,
        lambda_dependent: true,
        run: thm_2_8,
    },
    Identity {
        id: "thm_2_9",
        description: "H^{(m)}_{n,λ} closed form matches Li_{m,λ}(t)/(1−t)",
        expected: Polarity::Pass,
        lambda_dependent: true,
        run: thm_2_9,
    },
];

/// Smallest `n` at which an expected failure is known to show.
pub(super) const MISPRINT_WITNESS_N: u64 = 2;

fn ns(cfg: &SuiteConfig) -> std::ops::RangeInclusive<u64> {
    1..=cfg.max_n
}

fn ms(cfg: &SuiteConfig) -> std::ops::RangeInclusive<u32> {
    1..=cfg.max_m
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Seeded random rational sequences shared by the transform identities.
pub fn random_sequences(cfg: &SuiteConfig) -> Vec<Vec<PolyLambda>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.random_seq_trials)
        .map(|_| {
            (0..RANDOM_SEQ_LEN)
                .map(|_| {
                    let num = rng.gen_range(-20i64..=20);
                    let den = rng.gen_range(1i64..=10);
                    PolyLambda::constant(q(num, den))
                })
                .collect()
        })
        .collect()
}

/// `a_k = binom(λ+k−1, k−1)/k` for `k = 1..=n`, whose binomial inversion is `H_{n,λ}`.
fn harmonic_preimage(n: u64) -> Vec<PolyLambda> {
    (1..=n)
        .map(|k| binom_poly(&lambda_plus(k as i64 - 1), k - 1).scale(&q(1, k as i64)))
        .collect()
}

fn chain_count(n: u64, m: u32) -> u64 {
    let c = binomial(n + m as u64 - 1, m as u64);
    u64::try_from(c).unwrap_or(u64::MAX)
}

fn classical_limits(cfg: &SuiteConfig) -> Vec<Outcome> {
    let mut out = Vec::new();
    let h = seq::h_def_table(cfg.max_n);
    for n in 0..=cfg.max_n {
        out.push(check(
            Cell::n(n).part("H"),
            h[n as usize].eval_at_zero().into(),
            seq::harmonic(n).into(),
        ));
    }
    for m in ms(cfg) {
        for n in 0..=cfg.max_n {
            out.push(check(
                Cell::n(n).with_m(m).part("H_order"),
                seq::h_order(n, m).eval_at_zero().into(),
                seq::harmonic_order(n, m).into(),
            ));
        }
        let li = gf::gf_polylog(m as i32, cfg.series_order);
        for n in ns(cfg) {
            out.push(check(
                Cell::n(n).with_m(m).part("polylog"),
                li.coeff(n as usize).eval_at_zero().into(),
                Rational::from_integer(n as i64).pow(-(m as i32)).expect("n ≥ 1").into(),
            ));
        }
    }
    for n in 0..=cfg.max_n {
        out.push(check(
            Cell::n(n).part("deg_derangement"),
            seq::deg_derangement(n).eval_at_zero().into(),
            Rational::from_bigint(seq::derangement(n)).into(),
        ));
    }
    let tri = seq::deg_stirling1_triangle(cfg.max_n);
    for n in 0..=cfg.max_n {
        for k in 0..=n {
            let unsigned = tri[n as usize][k as usize].scale(&Rational::sign_power(n - k));
            out.push(check(
                Cell::n(n).with_k(k).part("stirling1_unsigned"),
                unsigned.eval_at_zero().into(),
                Rational::from_bigint(seq::stirling1_unsigned_classical(n, k)).into(),
            ));
        }
    }
    out
}

fn conclusion_k_single_sum(cfg: &SuiteConfig) -> Vec<Outcome> {
    let mut out = Vec::new();
    for m in ms(cfg) {
        let gfk = gf::gf_k(m, cfg.series_order).expect("m ≥ 1");
        for n in ns(cfg) {
            out.push(check(Cell::n(n).with_m(m), seq::k_single_sum(n, m), gfk.coeff(n as usize).clone()));
        }
    }
    out
}

fn cor_2_2(cfg: &SuiteConfig) -> Vec<Outcome> {
    ns(cfg)
        .map(|n| {
            let (l, r) = seq::harmonic_difference_sides(n);
            check(Cell::n(n), l, r)
        })
        .collect()
}

fn eq_13(cfg: &SuiteConfig) -> Vec<Outcome> {
    let order = cfg.series_order;
    let tri = seq::deg_stirling1_triangle(cfg.max_n);
    let base = gf::gf_neg_log_one_minus_t(order);
    let mut power = TruncatedSeries::one(order);
    let mut out = Vec::new();
    for k in 0..=cfg.max_n {
        if k > 0 {
            power = &power * &base;
        }
        let egf = power.scale(&factorial_q(k).recip().expect("nonzero")).egf_to_sequence();
        for n in 0..=cfg.max_n {
            let closed = tri[n as usize]
                .get(k as usize)
                .map(|s| s.scale(&Rational::sign_power(n.abs_diff(k))))
                .unwrap_or_default();
            out.push(check(Cell::n(n).with_k(k), closed, egf[n as usize].clone()));
        }
    }
    out
}

fn eq_15(cfg: &SuiteConfig) -> Vec<Outcome> {
    let egf = gf::gf_deg_derangement(cfg.series_order).egf_to_sequence();
    (0..=cfg.max_n)
        .map(|n| check(Cell::n(n), seq::deg_derangement(n), egf[n as usize].clone()))
        .collect()
}

fn eq_18(cfg: &SuiteConfig) -> Vec<Outcome> {
    let h = seq::h_def_table(cfg.max_n);
    ns(cfg)
        .map(|n| {
            let step = binom_poly(&lambda_plus(-1), n - 1)
                .scale(&(Rational::sign_power(n - 1) * q(1, n as i64)));
            check(Cell::n(n), &h[n as usize] - &h[n as usize - 1], step)
        })
        .collect()
}

fn eq_2(cfg: &SuiteConfig) -> Vec<Outcome> {
    let classical = gf::gf_classical_harmonic(cfg.series_order);
    let at_zero = gf::gf_h(cfg.series_order).eval_lambda(&Rational::zero());
    let mut out = Vec::new();
    for n in 0..=cfg.max_n {
        let c = classical.coeff(n as usize).clone();
        out.push(check(Cell::n(n).part("partial_sum"), c.clone(), seq::harmonic(n).into()));
        out.push(check(Cell::n(n).part("degenerate_at_zero"), at_zero.coeff(n as usize).clone(), c));
    }
    out
}

fn eq_4(cfg: &SuiteConfig) -> Vec<Outcome> {
    let order = cfg.series_order;
    let log = gf::gf_deg_log(order);
    let reverted = gf::gf_deg_log_by_reversion(order);
    let exp_m1 = &gf::gf_deg_exp(&Rational::one(), order) - &TruncatedSeries::one(order);
    let t = TruncatedSeries::t(order);
    let exp_of_log = exp_m1.compose(&log).expect("log has zero constant term");
    let log_of_exp = log.compose(&exp_m1).expect("e_λ − 1 has zero constant term");
    let mut out = Vec::new();
    for n in 0..=order {
        let cell = Cell::n(n as u64);
        out.push(check(cell.clone().part("closed_vs_reversion"), log.coeff(n).clone(), reverted.coeff(n).clone()));
        out.push(check(cell.clone().part("exp_after_log"), exp_of_log.coeff(n).clone(), t.coeff(n).clone()));
        out.push(check(cell.part("log_after_exp"), log_of_exp.coeff(n).clone(), t.coeff(n).clone()));
    }
    out
}

fn eq_6(cfg: &SuiteConfig) -> Vec<Outcome> {
    let g = gf::gf_h(cfg.series_order);
    (0..=cfg.max_n)
        .map(|n| check(Cell::n(n), seq::h_def(n), g.coeff(n as usize).clone()))
        .collect()
}

fn eq_8(cfg: &SuiteConfig) -> Vec<Outcome> {
    let order = cfg.series_order;
    let base = gf::t_over_one_minus_t(order);
    let mut power = TruncatedSeries::one(order);
    let mut out = Vec::new();
    for k in 0..=cfg.max_n {
        if k > 0 {
            power = &power * &base;
        }
        let egf = power.scale(&factorial_q(k).recip().expect("nonzero")).egf_to_sequence();
        for n in 0..=cfg.max_n {
            let closed = PolyLambda::constant(Rational::from_bigint(seq::lah(n, k)));
            out.push(check(Cell::n(n).with_k(k), closed, egf[n as usize].clone()));
        }
    }
    out
}

fn lemma_2_4(cfg: &SuiteConfig) -> Vec<Outcome> {
    let mut out = Vec::new();
    let weighted_prefix = |b: &[PolyLambda]| -> Vec<PolyLambda> {
        let mut acc = PolyLambda::zero();
        b.iter()
            .enumerate()
            .map(|(i, x)| {
                acc += &x.scale(&q(1, i as i64 + 1));
                acc.clone()
            })
            .collect()
    };
    for (t, a) in random_sequences(cfg).iter().enumerate() {
        let direct = seq::weighted_inversion(a, 1);
        let rhs = weighted_prefix(&seq::binomial_inversion(a));
        for (i, (l, r)) in direct.into_iter().zip(rhs).enumerate() {
            out.push(check(Cell::n(i as u64 + 1).with_trial(t as u32).part("random"), l, r));
        }
    }
    let a = harmonic_preimage(cfg.max_n);
    let direct = seq::weighted_inversion(&a, 1);
    let h = seq::h_def_table(cfg.max_n);
    let rhs = weighted_prefix(&h[1..]);
    for (i, (l, r)) in direct.into_iter().zip(rhs).enumerate() {
        out.push(check(Cell::n(i as u64 + 1).part("harmonic"), l, r));
    }
    out
}

fn remark_2_11(cfg: &SuiteConfig) -> Vec<Outcome> {
    let mut out = Vec::new();
    for m in ms(cfg) {
        let li = gf::gf_polylog(m as i32, cfg.series_order);
        for n in ns(cfg) {
            let diff = &seq::h_order(n, m) - &seq::h_order(n - 1, m);
            out.push(check(Cell::n(n).with_m(m).part("closed_form"), li.coeff(n as usize).clone(), diff));
        }
    }
    let li1 = gf::gf_polylog(1, cfg.series_order);
    let h = gf::gf_h(cfg.series_order);
    for n in ns(cfg) {
        let n = n as usize;
        out.push(check(
            Cell::n(n as u64).with_m(1).part("series"),
            li1.coeff(n).clone(),
            h.coeff(n) - h.coeff(n - 1),
        ));
    }
    out
}

fn thm_2_1(cfg: &SuiteConfig) -> Vec<Outcome> {
    ns(cfg).map(|n| check(Cell::n(n), seq::h_binom(n), seq::h_def(n))).collect()
}

fn thm_2_10_as_derived(cfg: &SuiteConfig) -> Vec<Outcome> {
    ns(cfg)
        .map(|n| check(Cell::n(n), seq::h_stirling(n, StirlingVariant::AsDerived), seq::h_def(n)))
        .collect()
}

fn thm_2_10_as_printed(cfg: &SuiteConfig) -> Vec<Outcome> {
    ns(cfg)
        .map(|n| check(Cell::n(n), seq::h_stirling(n, StirlingVariant::AsPrinted), seq::h_def(n)))
        .collect()
}

fn thm_2_12(cfg: &SuiteConfig) -> Vec<Outcome> {
    ns(cfg).map(|n| check(Cell::n(n), seq::h_derangement(n), seq::h_def(n))).collect()
}

fn thm_2_3(cfg: &SuiteConfig) -> Vec<Outcome> {
    let mut out = Vec::new();
    for (t, a) in random_sequences(cfg).iter().enumerate() {
        let twice = seq::binomial_inversion(&seq::binomial_inversion(a));
        for (i, (l, r)) in twice.into_iter().zip(a.iter().cloned()).enumerate() {
            out.push(check(Cell::n(i as u64 + 1).with_trial(t as u32).part("random"), l, r));
        }
    }
    let a = harmonic_preimage(cfg.max_n);
    let b = seq::binomial_inversion(&a);
    let h = seq::h_def_table(cfg.max_n);
    for (i, bn) in b.iter().enumerate() {
        out.push(check(Cell::n(i as u64 + 1).part("harmonic"), bn.clone(), h[i + 1].clone()));
    }
    let back = seq::binomial_inversion(&b);
    for (i, (l, r)) in back.into_iter().zip(a).enumerate() {
        out.push(check(Cell::n(i as u64 + 1).part("harmonic_involution"), l, r));
    }
    out
}

fn thm_2_5(cfg: &SuiteConfig) -> Vec<Outcome> {
    let mut out = Vec::new();
    for (t, a) in random_sequences(cfg).iter().enumerate() {
        let b = seq::binomial_inversion(a);
        for m in ms(cfg) {
            let direct = seq::weighted_inversion(a, m);
            let dp = seq::chain_sum(&b, m);
            let cell = |n: usize, part| Cell::n(n as u64).with_m(m).with_trial(t as u32).part(part);
            if chain_count(RANDOM_SEQ_LEN as u64, m) > ENUMERATION_LIMIT {
                for n in 1..=RANDOM_SEQ_LEN {
                    out.push(Outcome::Skip {
                        cell: cell(n, "enumerated"),
                        reason: format!("more than {ENUMERATION_LIMIT} chains"),
                    });
                }
            } else {
                let brute = seq::chain_sum_enumerated(&b, m);
                for (i, (l, r)) in direct.iter().zip(brute).enumerate() {
                    out.push(check(cell(i + 1, "enumerated"), l.clone(), r));
                }
            }
            for (i, (l, r)) in direct.into_iter().zip(dp).enumerate() {
                out.push(check(cell(i + 1, "dp"), l, r));
            }
        }
    }
    out
}

fn thm_2_6(cfg: &SuiteConfig) -> Vec<Outcome> {
    let mut out = Vec::new();
    for m in ms(cfg) {
        for n in ns(cfg) {
            let (lhs, rhs) = seq::weighted_inversion_sides(n, m);
            let cell = Cell::n(n).with_m(m);
            if chain_count(n, m) > ENUMERATION_LIMIT {
                out.push(Outcome::Skip {
                    cell: cell.clone().part("enumerated"),
                    reason: format!("more than {ENUMERATION_LIMIT} chains"),
                });
            } else {
                out.push(check(cell.clone().part("enumerated"), lhs.clone(), seq::k_nested_enumerated(n, m)));
            }
            out.push(check(cell.part("dp"), lhs, rhs));
        }
    }
    out
}

fn thm_2_7(cfg: &SuiteConfig) -> Vec<Outcome> {
    let mut out = Vec::new();
    let h = gf::gf_h(cfg.series_order);
    for m in ms(cfg) {
        let gfk = gf::gf_k(m, cfg.series_order).expect("m ≥ 1");
        for n in ns(cfg) {
            let coeff = gfk.coeff(n as usize).clone();
            let cell = Cell::n(n).with_m(m);
            out.push(check(cell.clone().part("nested"), seq::k_nested(n, m), coeff.clone()));
            out.push(check(cell.part("binom"), seq::k_binom(n, m), coeff));
        }
        if m == 1 {
            for n in ns(cfg) {
                out.push(check(
                    Cell::n(n).with_m(1).part("k1_is_h"),
                    gfk.coeff(n as usize).clone(),
                    h.coeff(n as usize).clone(),
                ));
            }
        }
    }
    out
}

fn thm_2_8(cfg: &SuiteConfig) -> Vec<Outcome> {
    let mut out = Vec::new();
    for m in ms(cfg) {
        let gfk = gf::gf_k(m, cfg.series_order).expect("m ≥ 1");
        for n in ns(cfg) {
            out.push(check(Cell::n(n).with_m(m), seq::k_lah(n, m), gfk.coeff(n as usize).clone()));
        }
    }
    out
}

fn thm_2_9(cfg: &SuiteConfig) -> Vec<Outcome> {
    let mut out = Vec::new();
    for m in ms(cfg) {
        let g = gf::gf_h_order(m, cfg.series_order).expect("m ≥ 1");
        for n in 0..=cfg.max_n {
            out.push(check(Cell::n(n).with_m(m), seq::h_order(n, m), g.coeff(n as usize).clone()));
        }
    }
    out
}
