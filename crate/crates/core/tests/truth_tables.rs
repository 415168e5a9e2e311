mod common;

use common::*;
use proptest::prelude::*;
use rotsym::boolfn::{
    eval_monomial_at, has_short_orbit, monomial_truth_table, mrs_truth_table, rotate_row, weight,
    weight_chunked, Budget, Interpretation, MonomialPattern, RSFunctionSpec, TruthTable,
};

fn pat(v: &[u32]) -> MonomialPattern {
    MonomialPattern::new(v.to_vec()).unwrap()
}

fn table(v: &[u32], n: u32) -> Vec<bool> {
    table_bits(&monomial_truth_table(&pat(v), n).unwrap())
}

/// Portion `a` (1-based) of `t` cut into `2^b` equal pieces.
fn portion(t: &[bool], a: usize, b: u32) -> &[bool] {
    let size = t.len() >> b;
    &t[(a - 1) * size..a * size]
}

#[test]
fn closed_form_matches_direct_evaluation() {
    for idx in patterns_from_one(6) {
        let top = *idx.last().unwrap();
        for n in top..=10 {
            let t = table(&idx, n);
            assert_eq!(t, monomial_bits(&idx, n), "{idx:?} n={n}");
            for j in [0, (1u64 << n) - 1, 0x2a % (1u64 << n)] {
                assert_eq!(eval_monomial_at(&pat(&idx), n, j).unwrap(), t[j as usize]);
            }
        }
    }
}

#[test]
fn ones_count_is_two_to_the_free_variables() {
    for idx in patterns_from_one(6) {
        let top = *idx.last().unwrap();
        for n in top..=10 {
            let w = monomial_truth_table(&pat(&idx), n).unwrap().weight();
            assert_eq!(w, 1u64 << (n - idx.len() as u32));
        }
    }
}

#[test]
fn quartic_closed_form() {
    // 0_{2^{n-1}} (0_{2^{n-i}} (0_{2^{n-j}} (0_{2^{n-k}} 1_{2^{n-k}})_{2^{k-j-1}})_{2^{j-i-1}})_{2^{i-2}}
    fn rep(block: Vec<bool>, times: u32) -> Vec<bool> {
        block.iter().copied().cycle().take(block.len() * times as usize).collect()
    }
    fn run(bit: bool, e: u32) -> Vec<bool> {
        vec![bit; 1 << e]
    }
    for i in 2..=6u32 {
        for j in i + 1..=7 {
            for k in j + 1..=8 {
                for n in k..=10 {
                    let inner = [run(false, n - k), run(true, n - k)].concat();
                    let b3 = rep([run(false, n - j), rep(inner, 1 << (k - j - 1))].concat(), 1 << (j - i - 1));
                    let b2 = rep([run(false, n - i), b3].concat(), 1 << (i - 2));
                    let expected = [run(false, n - 1), b2].concat();
                    assert_eq!(table(&[1, i, j, k], n), expected, "(1,{i},{j},{k}) n={n}");
                }
            }
        }
    }
}

#[test]
fn htilde_block_identities() {
    // x_j x_{n-a+1+j}: doubled pieces of the (n-1)-variable table, and the
    // refinement into 2^k pieces drawn from the (n-k+j)-variable table.
    for a in 2..=6u32 {
        for n in a + 1..=12 {
            for j in 1..a {
                let h = |m: u32| table(&[j, m - a + 1 + j], m);
                let t = h(n);
                let prev = h(n - 1);
                let eq1: Vec<bool> = (1..=1usize << j)
                    .flat_map(|p| portion(&prev, p, j).repeat(2))
                    .collect();
                assert_eq!(t, eq1, "eq1 a={a} n={n} j={j}");
                for k in j + 1..=n - a + j {
                    let small = h(n - k + j);
                    let eq2: Vec<bool> = (1..=1usize << j)
                        .flat_map(|p| portion(&small, p, j).repeat(1 << (k - j)))
                        .collect();
                    assert_eq!(t, eq2, "eq2 a={a} n={n} j={j} k={k}");
                }
            }
        }
    }
}

#[test]
fn cubic_h_block_identities() {
    // h_j = x_j x_{n-s+1+j} x_{n-s+r+j} for 1 <= j <= s - r.
    for s in 3..=6u32 {
        for r in 2..s {
            for n in s + 1..=12 {
                for j in 1..=s - r {
                    let h = |m: u32| table(&[j, m - s + 1 + j, m - s + r + j], m);
                    let t = h(n);
                    let prev = h(n - 1);
                    let pairs: Vec<bool> = (1..=1usize << j)
                        .flat_map(|p| portion(&prev, p, j).repeat(2))
                        .collect();
                    assert_eq!(t, pairs, "h r={r} s={s} n={n} j={j}");
                    for k in j + 1..=n - s + j {
                        let small = h(n - k + j);
                        let refined: Vec<bool> = (1..=1usize << j)
                            .flat_map(|p| portion(&small, p, j).repeat(1 << (k - j)))
                            .collect();
                        assert_eq!(t, refined, "h r={r} s={s} n={n} j={j} k={k}");
                    }
                }
            }
        }
    }
}

#[test]
fn cubic_eta_block_identities() {
    // eta_j = x_j x_{s-r+j} x_{n-r+1+j} for 1 <= j <= r - 1.
    for s in 3..=6u32 {
        for r in 2..s {
            for n in s + 1..=12 {
                for j in 1..r {
                    let eta = |m: u32| table(&[j, s - r + j, m - r + 1 + j], m);
                    let b = s - r + j;
                    let t = eta(n);
                    let prev = eta(n - 1);
                    let pairs: Vec<bool> = (1..=1usize << b)
                        .flat_map(|p| portion(&prev, p, b).repeat(2))
                        .collect();
                    assert_eq!(t, pairs, "eta r={r} s={s} n={n} j={j}");
                    for k in b + 1..=n - r + j {
                        let small = eta(n - k + b);
                        let refined: Vec<bool> = (1..=1usize << b)
                            .flat_map(|p| portion(&small, p, b).repeat(1 << (k - b)))
                            .collect();
                        assert_eq!(t, refined, "eta r={r} s={s} n={n} j={j} k={k}");
                        // Grouped form: (A_{2^{s-r}} || B_{2^{s-r-1}})_{2^{j-1}}.
                        let rep = 1usize << (k - b);
                        let a_blk = portion(&small, 1, b).repeat(rep);
                        let b_blk = [
                            portion(&small, (1 << (s - r)) + 1, b).repeat(rep),
                            portion(&small, (1 << (s - r)) + 2, b).repeat(rep),
                        ]
                        .concat();
                        let unit = [a_blk.repeat(1 << (s - r)), b_blk.repeat(1 << (s - r - 1))].concat();
                        assert_eq!(t, unit.repeat(1 << (j - 1)), "eta grouped r={r} s={s} n={n} j={j} k={k}");
                    }
                }
            }
        }
    }
}

#[test]
fn battery_tables_are_rotation_invariant() {
    let mut specs: Vec<&str> = BATTERY.to_vec();
    specs.extend(["1,2,3", "1,2,6;1,2;1,6"]);
    for s in specs {
        let spec: RSFunctionSpec = s.parse().unwrap();
        for n in spec.max_top()..=14 {
            for interp in [Interpretation::OrbitDistinct, Interpretation::FullSum] {
                let t = mrs_truth_table(&spec, n, interp).unwrap();
                for j in 0..1u64 << n {
                    assert_eq!(t.get(j), t.get(rotate_row(j, n)), "{s} n={n} j={j}");
                }
            }
        }
    }
}

#[test]
fn tables_match_oracle_on_triple() {
    let spec: RSFunctionSpec = "1,2,6;1,2;1,6".parse().unwrap();
    for n in 6..=12 {
        for interp in [Interpretation::OrbitDistinct, Interpretation::FullSum] {
            let t = mrs_truth_table(&spec, n, interp).unwrap();
            let expect = TruthTable::from_fn(n, |j| eval_spec(&spec, n, interp, j));
            assert_eq!(t, expect, "n={n} {interp}");
        }
    }
}

#[test]
fn chunk_size_does_not_change_weight() {
    let budget = Budget::default();
    for s in BATTERY.iter().chain(&["1,2,6;1,2;1,6"]) {
        let spec: RSFunctionSpec = s.parse().unwrap();
        for n in [spec.max_top(), 9, 15, 18] {
            let w: Vec<u64> = [6, 10, 14]
                .iter()
                .map(|&c| weight_chunked(&spec, n, Interpretation::OrbitDistinct, budget, c).unwrap())
                .collect();
            assert!(w.windows(2).all(|p| p[0] == p[1]), "{s} n={n}: {w:?}");
        }
    }
}

#[test]
fn interpretations_agree_off_short_n() {
    for s in BATTERY.iter().chain(&["1,2,6;1,2;1,6", "1,5", "1,3,5,7"]) {
        let spec: RSFunctionSpec = s.parse().unwrap();
        for n in spec.max_top()..=14 {
            let od = mrs_truth_table(&spec, n, Interpretation::OrbitDistinct).unwrap();
            let fs = mrs_truth_table(&spec, n, Interpretation::FullSum).unwrap();
            if !has_short_orbit(&spec, n).unwrap() {
                assert_eq!(od, fs, "{s} n={n}");
            }
        }
    }
}

#[test]
fn budget_is_enforced() {
    let spec: RSFunctionSpec = "1,2".parse().unwrap();
    assert!(weight(&spec, 12, Interpretation::OrbitDistinct, Budget { max_n: 11 }).is_err());
}

fn spec_strategy() -> impl Strategy<Value = RSFunctionSpec> {
    let gen = prop::collection::btree_set(2u32..=7, 1..=3).prop_map(|rest| {
        let mut v = vec![1];
        v.extend(rest);
        v
    });
    prop::collection::btree_set(gen, 1..=3).prop_filter_map("valid spec", |gens| {
        let pats = gens.into_iter().map(|g| MonomialPattern::new(g).unwrap()).collect();
        RSFunctionSpec::new(pats).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn weight_matches_enumeration(spec in spec_strategy(), extra in 0u32..5, full in any::<bool>()) {
        let n = spec.max_top() + extra;
        let interp = if full { Interpretation::FullSum } else { Interpretation::OrbitDistinct };
        let w = weight(&spec, n, interp, Budget::default()).unwrap();
        prop_assert_eq!(w, brute_weight(&spec, n, interp));
    }

    #[test]
    fn random_specs_are_rotation_invariant(spec in spec_strategy(), extra in 0u32..4) {
        let n = spec.max_top() + extra;
        let t = mrs_truth_table(&spec, n, Interpretation::OrbitDistinct).unwrap();
        for j in 0..1u64 << n {
            prop_assert_eq!(t.get(j), t.get(rotate_row(j, n)));
        }
    }
}
