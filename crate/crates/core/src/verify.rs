//! Desk-sized cross-checks of every formula against brute force.
//!
//! The closed-form counting functions are passed in through [`Formulas`] so
//! a deliberately broken formula can be substituted to confirm the suite
//! catches it.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::enumerate::{self, BigCount};
use crate::error::Result;
use crate::field::{Fe, Field};
use crate::lfsr::{self, berlekamp_massey_raw, for_each_sequence, Sequence};
use crate::oss::{self, OssParams};
use crate::rsbridge::{self, CoeffVector, RsParams};

type Count3 = fn(u64, usize, usize) -> Result<BigCount>;
type Count4 = fn(u64, usize, usize, usize) -> Result<BigCount>;

/// The formulas under test.
#[derive(Clone, Copy)]
pub struct Formulas {
    pub count_le_closed: Count3,
    pub count_le_recur: Count3,
    pub count_le_sum: Count3,
    pub count_exact: Count3,
    pub count_first_nonzero: Count4,
    pub singleton_bound: Count3,
    pub sphere_packing_bound: Count3,
}

impl Default for Formulas {
    fn default() -> Self {
        Formulas {
            count_le_closed: enumerate::count_le_closed,
            count_le_recur: enumerate::count_le_recur,
            count_le_sum: enumerate::count_le_sum,
            count_exact: enumerate::count_exact,
            count_first_nonzero: enumerate::count_first_nonzero,
            singleton_bound: oss::singleton_bound,
            sphere_packing_bound: enumerate::sphere_packing_bound,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Lfsr,
    Oss,
    Enumerate,
    Rsbridge,
    Daykin,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "lfsr" => Suite::Lfsr,
            "oss" => Suite::Oss,
            "enumerate" => Suite::Enumerate,
            "rsbridge" => Suite::Rsbridge,
            "daykin" => Suite::Daykin,
            "all" => Suite::All,
            other => {
                return Err(format!(
                "unknown suite `{other}` (expected lfsr, oss, enumerate, rsbridge, daykin or all)"
            ))
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

fn outcome(name: &'static str, r: std::result::Result<String, String>) -> CheckOutcome {
    match r {
        Ok(detail) => CheckOutcome {
            name,
            passed: true,
            detail,
        },
        Err(detail) => CheckOutcome {
            name,
            passed: false,
            detail,
        },
    }
}

type Check = std::result::Result<String, String>;

fn e<E: fmt::Display>(err: E) -> String {
    err.to_string()
}

pub fn run_suite(suite: Suite, formulas: &Formulas) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Lfsr {
        out.push(outcome("bm-vs-oracle", check_bm_oracle()));
        out.push(outcome("lc-upper-bound", check_upper_bound()));
        out.push(outcome("subadditivity", check_subadditivity()));
        out.push(outcome("bm-round-trip", check_round_trip()));
    }
    if all || suite == Suite::Oss {
        out.push(outcome(
            "oss-singleton-optimal",
            check_oss_optimal(formulas),
        ));
        out.push(outcome("oss-decoder", check_oss_decoder()));
    }
    if all || suite == Suite::Enumerate {
        out.push(outcome(
            "exact-counts-vs-brute",
            check_exact_counts(formulas),
        ));
        out.push(outcome(
            "ball-formulas-agree",
            check_ball_formulas(formulas),
        ));
        out.push(outcome(
            "first-nonzero-partition",
            check_partition(formulas),
        ));
        out.push(outcome("sphere-packing", check_sphere_packing(formulas)));
    }
    if all || suite == Suite::Rsbridge {
        out.push(outcome("konig-rados", check_konig_rados()));
        out.push(outcome(
            "periodic-lc-equals-weight",
            check_periodic_weight(),
        ));
        out.push(outcome("rs-decode", check_rs_decode()));
    }
    if all || suite == Suite::Daykin {
        out.push(outcome("daykin-reduction", check_daykin()));
    }
    out
}

fn gf(p: u64) -> Field {
    Field::prime(p).expect("small prime")
}

fn check_bm_oracle() -> Check {
    let mut total = 0u64;
    for (p, max_n) in [(2, 10), (3, 5)] {
        let f = gf(p);
        for n in 0..=max_n {
            let mut bad = None;
            for_each_sequence(&f, n, |s| {
                if bad.is_some() {
                    return;
                }
                let seq = Sequence::new(&f, s.to_vec()).expect("canonical");
                let bm = lfsr::linear_complexity(&seq);
                match lfsr::min_lfsr_oracle(&seq) {
                    Ok(o) if o == bm => total += 1,
                    other => bad = Some(format!("{seq:?}: bm {bm}, oracle {other:?}")),
                }
            });
            if let Some(b) = bad {
                return Err(b);
            }
        }
    }
    Ok(format!("{total} sequences agree"))
}

fn check_upper_bound() -> Check {
    for (p, max_n) in [(2, 10), (3, 6)] {
        let f = gf(p);
        for n in 1..=max_n {
            let mut bad = None;
            for_each_sequence(&f, n, |s| {
                let l = berlekamp_massey_raw(&f, s).0;
                let extremal = s[..n - 1].iter().all(|x| x.is_zero()) && !s[n - 1].is_zero();
                if l > n || (l == n) != extremal {
                    bad = Some(format!("{s:?} over GF({p}) has L = {l}"));
                }
            });
            if let Some(b) = bad {
                return Err(b);
            }
        }
    }
    Ok("L <= n with equality exactly for (0, ..., 0, a)".into())
}

fn all_lcs(f: &Field, n: usize) -> Vec<(Vec<Fe>, usize)> {
    let mut out = Vec::new();
    for_each_sequence(f, n, |s| {
        out.push((s.to_vec(), berlekamp_massey_raw(f, s).0))
    });
    out
}

fn check_subadditivity() -> Check {
    let f = gf(2);
    let mut pairs = 0u64;
    for n in 1..=6 {
        let table = all_lcs(&f, n);
        for (a, la) in &table {
            for (b, lb) in &table {
                let sum: Vec<Fe> = a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect();
                let lc = berlekamp_massey_raw(&f, &sum).0;
                if lc > la + lb {
                    return Err(format!("L({a:?} + {b:?}) = {lc} > {la} + {lb}"));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn check_round_trip() -> Check {
    for (p, max_n) in [(2, 9), (3, 5), (5, 4)] {
        let f = gf(p);
        for n in 0..=max_n {
            let mut bad = None;
            for_each_sequence(&f, n, |s| {
                let seq = Sequence::new(&f, s.to_vec()).expect("canonical");
                let r = lfsr::berlekamp_massey(&seq);
                let regen = r
                    .register_for(&seq)
                    .map(|spec| lfsr::lfsr_generate(&spec, n));
                if regen.as_ref() != Ok(&seq) {
                    bad = Some(format!("{seq:?} regenerated as {regen:?}"));
                }
            });
            if let Some(b) = bad {
                return Err(b);
            }
        }
    }
    Ok("every sequence regenerated from its minimal register".into())
}

fn check_oss_optimal(formulas: &Formulas) -> Check {
    let mut sets = 0;
    for p in [2u64, 3] {
        let f = gf(p);
        for n in 1..=6 {
            for k in 1..=n {
                let params = OssParams::new(&f, n, k).map_err(e)?;
                let book = oss::oss_codebook(&params, 1 << 20).map_err(e)?;
                let d = if book.len() * book.len() <= 2_000_000 {
                    oss::min_distance_exhaustive_limited(&book, 1_000_000).map_err(e)?
                } else {
                    oss::min_distance_linear(&book).map_err(e)?
                };
                let bound = (formulas.singleton_bound)(p, n, d).map_err(e)?;
                if d != n - k + 1 || bound != BigUint::from(book.len()) {
                    return Err(format!(
                        "q={p} n={n} k={k}: d = {d}, bound {bound}, size {}",
                        book.len()
                    ));
                }
                sets += 1;
            }
        }
    }
    Ok(format!("{sets} codebooks meet the bound"))
}

fn check_oss_decoder() -> Check {
    let f = gf(2);
    let mut cases = 0u64;
    for n in 1..=7 {
        let table = all_lcs(&f, n);
        for k in 1..=n {
            let params = OssParams::new(&f, n, k).map_err(e)?;
            let book = oss::oss_codebook(&params, 1 << 20).map_err(e)?;
            for (err, l) in &table {
                if 2 * l > n - k {
                    continue;
                }
                let err = Sequence::new(&f, err.clone()).map_err(e)?;
                for x in &book {
                    let y = x.add(&err).map_err(e)?;
                    let got = oss::oss_decode(&params, &y).map_err(|er| format!("{y:?}: {er}"))?;
                    if &got.corrected != x || got.error != err {
                        return Err(format!("{y:?} decoded to {:?}", got.corrected));
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} received words decoded"))
}

fn check_exact_counts(formulas: &Formulas) -> Check {
    for (p, max_n) in [(2, 10), (3, 6), (5, 4)] {
        let f = gf(p);
        for n in 1..=max_n {
            let h = enumerate::brute_histogram(&f, n).map_err(e)?;
            for r in 0..=n {
                let want = (formulas.count_exact)(p, n, r).map_err(e)?;
                if h.counts()[r] != want {
                    return Err(format!(
                        "q={p} n={n} r={r}: brute {}, formula {want}",
                        h.counts()[r]
                    ));
                }
                let ball = (formulas.count_le_closed)(p, n, r).map_err(e)?;
                if h.cumulative(r) != ball {
                    return Err(format!(
                        "q={p} n={n} r={r}: brute ball {}, formula {ball}",
                        h.cumulative(r)
                    ));
                }
            }
        }
    }
    Ok("histograms match for q in {2,3,5}".into())
}

fn check_ball_formulas(formulas: &Formulas) -> Check {
    let mut cells = 0;
    for q in [2u64, 3, 4, 5, 7] {
        for n in 0..=40 {
            for r in 0..=n {
                let c = (formulas.count_le_closed)(q, n, r).map_err(e)?;
                let rc = (formulas.count_le_recur)(q, n, r).map_err(e)?;
                let s = (formulas.count_le_sum)(q, n, r).map_err(e)?;
                if c != rc || c != s {
                    return Err(format!(
                        "q={q} n={n} r={r}: closed {c}, recur {rc}, sum {s}"
                    ));
                }
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} (q, n, r) cells"))
}

fn check_partition(formulas: &Formulas) -> Check {
    for q in [2u64, 3, 4, 5, 7] {
        for n in 1..=30 {
            for r in 0..=n {
                let parts: BigUint = (0..n)
                    .map(|u| (formulas.count_first_nonzero)(q, n, r, u))
                    .sum::<Result<BigUint>>()
                    .map_err(e)?;
                let ball = (formulas.count_le_closed)(q, n, r).map_err(e)?;
                if parts + 1u32 != ball {
                    return Err(format!(
                        "q={q} n={n} r={r}: partition does not sum to {ball}"
                    ));
                }
            }
        }
    }
    for p in [2u64, 3] {
        let f = gf(p);
        for n in 1..=6 {
            let mut tally = vec![vec![0u64; n + 1]; n];
            for_each_sequence(&f, n, |s| {
                if let Some(u) = s.iter().position(|x| !x.is_zero()) {
                    tally[u][berlekamp_massey_raw(&f, s).0] += 1;
                }
            });
            for (u, row) in tally.iter().enumerate() {
                let mut running = 0u64;
                for (r, &c) in row.iter().enumerate() {
                    running += c;
                    let want = (formulas.count_first_nonzero)(p, n, r, u).map_err(e)?;
                    if want != BigUint::from(running) {
                        return Err(format!(
                            "q={p} n={n} r={r} u={u}: brute {running}, formula {want}"
                        ));
                    }
                }
            }
        }
    }
    Ok("per-index counts sum to the ball and match brute force".into())
}

fn check_sphere_packing(formulas: &Formulas) -> Check {
    let got = (formulas.sphere_packing_bound)(2, 7, 3).map_err(e)?;
    if got != BigUint::from(42u32) {
        return Err(format!("bound(2, 7, 3) = {got}, expected 42"));
    }
    let f = gf(2);
    for n in 1..=6 {
        let table = all_lcs(&f, n);
        for k in 1..=n {
            let params = OssParams::new(&f, n, k).map_err(e)?;
            let book = oss::oss_codebook(&params, 1 << 20).map_err(e)?;
            let t = (params.min_distance() - 1) / 2;
            let bound = (formulas.sphere_packing_bound)(2, n, params.min_distance()).map_err(e)?;
            if BigUint::from(book.len()) > bound {
                return Err(format!(
                    "n={n} k={k}: {} codewords exceed bound {bound}",
                    book.len()
                ));
            }
            for (y, _) in &table {
                let close = book
                    .iter()
                    .filter(|x| {
                        let diff: Vec<Fe> = x
                            .elems()
                            .iter()
                            .zip(y)
                            .map(|(&a, &b)| f.sub(a, b))
                            .collect();
                        berlekamp_massey_raw(&f, &diff).0 <= t
                    })
                    .count();
                if close > 1 {
                    return Err(format!(
                        "n={n} k={k}: {y:?} lies in {close} balls of radius {t}"
                    ));
                }
            }
        }
    }
    Ok("bound(2,7,3) = 42; OSS balls disjoint for n <= 6".into())
}

fn for_each_coeff_vector(f: &Field, mut visit: impl FnMut(CoeffVector)) {
    for_each_sequence(f, (f.q() - 1) as usize, |s| {
        visit(CoeffVector::new(f, s.to_vec()).expect("length q - 1"))
    });
}

fn check_konig_rados() -> Check {
    let mut cases = 0;
    for p in [3u64, 5] {
        let f = gf(p);
        let mut bad = None;
        for_each_coeff_vector(&f, |c| {
            let (kr, direct) = (
                rsbridge::konig_rados_roots(&c),
                rsbridge::count_roots_direct(&c),
            );
            if kr != direct {
                bad = Some(format!(
                    "{:?}: rank route {kr}, direct {direct}",
                    c.coeffs()
                ));
            }
            cases += 1;
        });
        if let Some(b) = bad {
            return Err(b);
        }
    }
    Ok(format!("{cases} polynomials"))
}

fn check_periodic_weight() -> Check {
    for p in [3u64, 5] {
        let f = gf(p);
        let params = RsParams::new(&f, (p - 1) as usize).map_err(e)?;
        let mut bad = None;
        for_each_coeff_vector(&f, |c| {
            let plc = rsbridge::periodic_lc(&c.as_sequence()).expect("nonempty");
            let word = rsbridge::rs_encode(&params, c.coeffs()).expect("k = n");
            let weight = rsbridge::hamming_weight(&word);
            let roots = rsbridge::count_roots_direct(&c);
            if plc != weight || weight != (p - 1) as usize - roots {
                bad = Some(format!(
                    "{:?}: periodic LC {plc}, weight {weight}, roots {roots}",
                    c.coeffs()
                ));
            }
        });
        if let Some(b) = bad {
            return Err(b);
        }
    }
    Ok("periodic LC = evaluation weight = q - 1 - roots".into())
}

fn check_rs_decode() -> Check {
    let f = gf(5);
    let params = RsParams::new(&f, 1).map_err(e)?;
    let mut singles = 0;
    let mut doubles = 0;
    for m in f.elements() {
        let cw = rsbridge::rs_encode(&params, &[m]).map_err(e)?;
        for pos in 0..4 {
            for mag in f.nonzero_elements() {
                let mut err = vec![Fe::ZERO; 4];
                err[pos] = mag;
                let err = Sequence::new(&f, err).map_err(e)?;
                let (msg, got) = rsbridge::rs_decode_via_bm(&params, &cw.add(&err).map_err(e)?)
                    .map_err(|er| format!("single error {err:?}: {er}"))?;
                if msg != [m] || got != err {
                    return Err(format!("single error {err:?} decoded wrongly"));
                }
                singles += 1;
                for pos2 in pos + 1..4 {
                    for mag2 in f.nonzero_elements() {
                        let mut err2 = err.elems().to_vec();
                        err2[pos2] = mag2;
                        let y = cw.add(&Sequence::new(&f, err2).map_err(e)?).map_err(e)?;
                        if rsbridge::rs_decode_via_bm(&params, &y).is_ok() {
                            return Err(format!("{y:?} with two errors was not rejected"));
                        }
                        doubles += 1;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{singles} single-error words corrected, {doubles} double-error words rejected"
    ))
}

fn check_daykin() -> Check {
    let f = gf(2);
    let mut cases = 0;
    for n in 1..=8 {
        let mut bad = None;
        for_each_sequence(&f, n, |s| {
            let seq = Sequence::new(&f, s.to_vec()).expect("canonical");
            for r in 0..n {
                match enumerate::daykin_check(&seq, r) {
                    Ok(true) => cases += 1,
                    Ok(false) => bad = Some(format!("{seq:?} r={r}")),
                    Err(_) => {}
                }
            }
        });
        if let Some(b) = bad {
            return Err(format!("reduction fails for {b}"));
        }
    }
    Ok(format!("{cases} (sequence, r) cases"))
}
