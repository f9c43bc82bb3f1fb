//! Acceptance gate: one test per advertised guarantee, each printing its own
//! pass/fail line through the harness.
//!
//! Every assertion here is exact — elements compare coefficient-by-
//! coefficient in ℚ and printed output compares byte-by-byte. Two of the
//! guarantees do not hold for the peak basis as specified (the canonical
//! family has linear dependencies, and the shift operator fails its defining
//! identity on peak generators); the corresponding tests state the guarantee
//! faithfully and are expected to fail, with the witnesses in the message.

use std::process::Command;
use std::time::{Duration, Instant};

use wcqsym::element::{Basis, Element};
use wcqsym::expand::{expand_k_to_m, gamma_empty, k0_f0_basis_change, lambda_empty, to_m};
use wcqsym::mutation::mutation_table;
use wcqsym::oracle::arbitrate;
use wcqsym::rota_baxter::rb_p;
use wcqsym::scalar::{self, binom, int};
use wcqsym::verify::{suite_basis, suite_hopf, suite_oracle, suite_rb, CheckResult};
use wcqsym::wc::WeakComposition;

const BIN: &str = env!("CARGO_BIN_EXE_wpq");

fn wc(parts: &[u64]) -> WeakComposition {
    WeakComposition::new(parts.to_vec())
}

fn elem(basis: Basis, terms: &[(&[u64], i64)]) -> Element {
    Element::from_terms(basis, terms.iter().map(|(p, c)| (wc(p), int(*c))))
}

fn zeros(r: u64) -> WeakComposition {
    WeakComposition::new(vec![0; r as usize])
}

/// Run the binary and return stdout, asserting exit 0.
fn cli(args: &[&str]) -> String {
    let out = Command::new(BIN)
        .args(args)
        .env_remove("WPQ_MAX_TOTAL_WEIGHT")
        .output()
        .expect("spawn wpq");
    assert_eq!(
        out.status.code(),
        Some(0),
        "wpq {args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 stdout")
}

fn assert_budget(start: Instant, budget: Duration, what: &str) {
    let elapsed = start.elapsed();
    assert!(
        elapsed <= budget,
        "{what} took {elapsed:?}, over the {budget:?} budget"
    );
}

fn assert_all_pass(results: &[CheckResult], what: &str) {
    let failures: String = results
        .iter()
        .filter(|check| !check.passed)
        .map(|check| format!("\n  FAIL {} — {}", check.name, check.detail))
        .collect();
    assert!(
        failures.is_empty(),
        "{what}: {} of {} checks failed{failures}",
        results.iter().filter(|check| !check.passed).count(),
        results.len()
    );
}

fn select<'a>(results: &'a [CheckResult], names: &[&str]) -> Vec<&'a CheckResult> {
    let picked: Vec<&CheckResult> = results
        .iter()
        .filter(|check| {
            names
                .iter()
                .any(|name| check.name == *name || check.name.starts_with(&format!("{name}[")))
        })
        .collect();
    assert!(!picked.is_empty(), "no checks matched {names:?}");
    picked
}

#[test]
fn criterion_1_golden_examples_replay_bit_exactly() {
    let start = Instant::now();

    // End-to-end through the binary: expansions, products, Hopf operations,
    // and the shift operator print the recorded bytes (canonical term order:
    // weight, total weight, length, lexicographic).
    let pinned: &[(&[&str], &str)] = &[
        (
            &["expand", "--from", "K", "--to", "M", "0,1"],
            "2*M[1] + 4*M[0,1]\n",
        ),
        (&["expand", "--from", "K", "--to", "M", "0"], "2*M[0]\n"),
        (
            &["expand", "--from", "K", "--to", "M", "0,0"],
            "2*M[0] + 4*M[0,0]\n",
        ),
        (
            &["expand", "--from", "K", "--to", "M", "0,0,0"],
            "2*M[0] + 8*M[0,0] + 8*M[0,0,0]\n",
        ),
        (
            &["expand", "--from", "K", "--to", "M", "0,0,0,0"],
            "2*M[0] + 12*M[0,0] + 24*M[0,0,0] + 16*M[0,0,0,0]\n",
        ),
        (
            &["mul", "--basis", "F", "1,0", "0,0,1"],
            "-1*F[0,1,0,1] - 2*F[1,0,0,1] + 1*F[0,0,2,0] + 1*F[0,0,1,0,1] \
             + 1*F[0,0,1,1,0] + 2*F[0,1,0,0,1] + 1*F[0,1,0,1,0] + 3*F[1,0,0,0,1] \
             + 1*F[1,0,0,1,0]\n",
        ),
        (
            &["mul", "--basis", "K", "2", "0,1"],
            "1*K[0,3] + 1*K[0,1,2] + 1*K[0,2,1] + 1*K[1,0,2] + 1*K[2,0,1] \
             + 1*K[1,0,1,1]\n",
        ),
        (
            &["mul", "--basis", "K", "0,0", "0,1"],
            "-1*K[0,1] + 3*K[0,0,0,1] + 2*K[0,0,1,0] + 1*K[0,1,0,0]\n",
        ),
        (
            &["expand", "--from", "K", "--to", "F", "2,0,0,0,1"],
            "4*F[1,2] - 4*F[2,1] + 24*F[2,0,1] + 8*F[1,1,0,1] - 48*F[2,0,0,1] \
             - 16*F[1,1,0,0,1] + 32*F[2,0,0,0,1] + 32*F[1,1,0,0,0,1]\n",
        ),
        (
            &["antipode", "--basis", "F", "2,0,0,0,1,0"],
            "-1*F[0,1,0,1,1] + 2*F[0,1,0,0,1,1] - 1*F[0,1,0,0,0,1,1]\n",
        ),
        (
            &["comul", "--basis", "K", "2,0,0,0,1,0"],
            "1*K[e]⊗K[2,0,0,0,1,0] + 1*K[1]⊗K[1,0,0,0,1,0] + 1*K[2]⊗K[0,0,0,1,0] \
             + 1*K[2,0]⊗K[0,0,1,0] + 1*K[2,0,0]⊗K[0,1,0] + 1*K[2,0,0,0]⊗K[1,0] \
             + 1*K[2,0,0,0,1]⊗K[0] + 1*K[2,0,0,0,1,0]⊗K[e]\n",
        ),
        (&["rb", "P", "--basis", "F", "0"], "-1*F[0] + 1*F[0,0]\n"),
        (
            &["rb", "P", "--basis", "F", "0,0"],
            "-1*F[0,0] + 1*F[0,0,0]\n",
        ),
        (
            &["rb", "P", "--basis", "K", "1,1"],
            "-1/2*K[2] + 1/2*K[0,2]\n",
        ),
        (
            &["rb", "P", "--basis", "K", "1,0,0,1"],
            "1/2*K[1,0,1] - 1/2*K[1,0,0,1] + 1/2*K[0,1,0,0,1]\n",
        ),
    ];
    for (args, want) in pinned {
        assert_eq!(cli(args), *want, "wpq {args:?}");
    }

    // The same values quoted elsewhere with their terms coarsest-first parse
    // to equal elements: term order is presentation, not content.
    for (args, quoted, basis) in [
        (
            ["expand", "--from", "K", "--to", "M", "0,1"].as_slice(),
            "4*M[0,1] + 2*M[1]",
            Basis::M,
        ),
        (
            ["mul", "--basis", "K", "0,0", "0,1"].as_slice(),
            "1*K[0,1,0,0] + 2*K[0,0,1,0] + 3*K[0,0,0,1] - 1*K[0,1]",
            Basis::K,
        ),
    ] {
        let ours = Element::parse(cli(args).trim(), basis).expect("own output parses");
        let theirs = Element::parse(quoted, basis).expect("quoted form parses");
        assert_eq!(ours, theirs, "wpq {args:?} vs quoted order");
    }

    // A segmentation with three realizations: the multiplicity is exactly 3,
    // and it reaches the monomial expansion as 3·2^6 on a length-6 target.
    let alpha = wc(&[0, 0, 4, 0, 0, 2, 0, 0, 1, 0, 1]);
    let beta = wc(&[2, 1, 3, 0, 1, 1]);
    assert_eq!(mutation_table(&alpha)[&beta].total, 3);
    assert_eq!(expand_k_to_m(&alpha).coefficient(&beta), int(192));

    // Closed forms for the barred-chain enumerators.
    let forms = lambda_empty(&wc(&[2, 1]));
    assert_eq!(forms.in_k, elem(Basis::K, &[(&[0, 0, 0], 1), (&[0], -1)]));
    assert_eq!(forms.in_m, elem(Basis::M, &[(&[0, 0, 0], 8), (&[0, 0], 8)]));
    let forms = gamma_empty(&wc(&[1, 1, 1]));
    assert_eq!(
        forms.in_f,
        elem(Basis::F, &[(&[0, 0, 0], 1), (&[0, 0], -2), (&[0], 1)])
    );

    // All-zero basis change: the closed binomial form matches the general
    // expansion route, and substituting the inverse forms recovers the
    // generators.
    for r in 1..=6u64 {
        let change = k0_f0_basis_change(r);
        let mut by_formula = Element::zero(Basis::M);
        for j in 1..=r as i64 {
            by_formula.add_term(
                zeros(j as u64),
                scalar::pow2(j) * binom(r as i64 - 1, j - 1),
            );
        }
        assert_eq!(change.k_in_m, by_formula, "closed form at r = {r}");
        assert_eq!(change.k_in_m, expand_k_to_m(&zeros(r)), "expansion route at r = {r}");
        assert_eq!(
            to_m(&change.m_in_k),
            Element::generator(Basis::M, zeros(r)),
            "inverse at r = {r}"
        );
        assert_eq!(
            to_m(&change.f_in_k),
            to_m(&Element::generator(Basis::F, zeros(r))),
            "inverse at r = {r}"
        );
    }

    // Shift operator on the all-zero fundamental family: appends a zero and
    // subtracts the input, for every exponent.
    for r in 1..=5u64 {
        let mut expected = Element::zero(Basis::F);
        expected.add_term(zeros(r + 1), int(1));
        expected.add_term(zeros(r), int(-1));
        assert_eq!(rb_p(&Element::generator(Basis::F, zeros(r))), expected);
    }

    // Structural maps and the extended binomial convention.
    let a = wc(&[2, 0, 0, 1, 1, 2]);
    assert_eq!(a.transpose(), wc(&[1, 3, 0, 0, 1, 1]));
    assert_eq!(a.complement(), wc(&[1, 1, 0, 0, 3, 1]));
    assert_eq!(binom(-1, -1), int(1));
    assert_eq!(binom(-1, 0), int(0));
    assert_eq!(binom(3, -1), int(0));

    assert_budget(start, Duration::from_secs(5), "golden replay");
}

#[test]
fn criterion_2_hopf_axioms_hold_in_all_bases() {
    let start = Instant::now();
    let results = suite_hopf(5);
    assert_budget(start, Duration::from_secs(60), "Hopf axiom suite");
    let axioms = select(
        &results,
        &[
            "coassociativity",
            "counit_laws",
            "antipode_convolution",
            "antipode_involutive",
            "bialgebra_compatibility",
        ],
    );
    assert_eq!(axioms.len(), 15, "five axiom families in three bases");
    let axioms: Vec<CheckResult> = axioms.into_iter().cloned().collect();
    assert_all_pass(&axioms, "Hopf axioms up to total weight 5");
}

#[test]
fn criterion_3_oracle_enumerations_match_expansions() {
    let start = Instant::now();
    let results = suite_oracle(5);
    assert_budget(start, Duration::from_secs(120), "oracle suite");
    let equivalence = select(
        &results,
        &[
            "enriched_enumeration_vs_expansion",
            "ordinary_enumeration_vs_expansion",
            "series_products",
        ],
    );
    assert_eq!(equivalence.len(), 5);
    let equivalence: Vec<CheckResult> = equivalence.into_iter().cloned().collect();
    assert_all_pass(&equivalence, "oracle equivalence up to total weight 5");
}

#[test]
fn criterion_4_canonical_peak_family_is_linearly_independent() {
    let start = Instant::now();
    let results = suite_basis(4);
    assert_budget(start, Duration::from_secs(30), "rank checks");
    // Fails: the canonical family carries genuine dependencies from weight 2
    // on (the first witness is K[0,1,1] + K[1,1,0] − K[0,2] − K[2,0] = 0),
    // so the claimed spanning family is not a basis. The failure message
    // names a dependency per weight.
    assert_all_pass(&results, "canonical peak family rank");
}

#[test]
fn criterion_5_rota_baxter_identities_hold() {
    let start = Instant::now();
    let results = suite_rb(5, 0);
    assert_budget(start, Duration::from_secs(60), "shift operator suite");
    // Fails on the peak-basis components: the shift operator satisfies the
    // weight-1 identity on monomial and fundamental generators (those checks
    // pass), but not on peak generators, where the shift formula disagrees
    // with the zero-prepending ground truth from weight 2 on. The companion
    // operator also depends on the representative chosen within an equality
    // class. Each failing check lists its first witnesses.
    assert_all_pass(&results, "shift operator identities");
}

#[test]
fn criterion_6_descent_to_peak_maps_are_morphisms() {
    let start = Instant::now();
    let results = suite_hopf(5);
    assert_budget(start, Duration::from_secs(60), "morphism suite");
    let maps = select(
        &results,
        &[
            "theta_algebra_map",
            "rho_algebra_map",
            "theta_coalgebra_map",
            "rho_coalgebra_map",
            "descent_to_peak_square",
            "phi_half_identity",
            "phi_b_closed_forms",
        ],
    );
    assert_eq!(maps.len(), 7);
    let maps: Vec<CheckResult> = maps.into_iter().cloned().collect();
    assert_all_pass(&maps, "descent-to-peak morphism checks");
}

#[test]
fn criterion_7_arbitration_report_is_produced_and_consistent() {
    let report = arbitrate(5, 4);

    // The report covers every strictly ordered pair of keys up to total
    // weight 5 and records the agreement rate between the structural
    // equality criterion and truncated-expansion equality.
    assert_eq!(report.bound, 5);
    assert_eq!(report.keys_checked, 144);
    assert_eq!(report.pairs_checked, 10296);
    let (agree, total) = report.agreement_rate();
    assert_eq!(total, report.pairs_checked);
    assert_eq!(agree, total, "criterion vs oracle disagreements: {:?}", report.discrepancies);
    assert!(report.discrepancies.is_empty());
    assert!(
        report.equivalence_consistent,
        "expansion equality must be an equivalence relation on the tested keys"
    );

    // The showcased pair — two keys with different peak sets whose enriched
    // enumerators were once claimed equal — is listed with both verdicts:
    // criterion and expansion agree that the two differ.
    assert_eq!(report.showcase.first_peaks, vec![5, 9, 12]);
    assert_eq!(report.showcase.second_peaks, vec![3, 5, 9]);
    assert!(!report.showcase.criterion_equal);
    assert!(!report.showcase.expansion_equal);
    assert_eq!(report.showcase.difference_terms, 315);
}
