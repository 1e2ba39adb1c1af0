//! Verification suites and construction dumps with a stable JSON layout.
//!
//! A suite is a list of items, each holding claims with an expected and an
//! actual value. Items are evaluated in parallel and reported in a fixed
//! order, so identical parameters give identical reports apart from
//! `elapsed_ms`.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::classical::{
    expected_block_pattern, gl_stab_outer, go_outer_regular, regular_in_sl, regular_in_so, regular_in_sp, GroupTag,
    RegularRep,
};
use crate::cyclotomic::order_witness;
use crate::error::{Error, Result};
use crate::field::FieldPrime;
use crate::jordan::{jordan_power, jordan_type, partitions, JordanType, TensorTable};
use crate::matrix::Matrix;
use crate::modstruct::LINE_CAP;
use crate::reptable::{
    a2_adjoint_outer, g2_rep, natural_rep, sym_power_rep, table_rows, tensor_swap9, tensor_wreath, Family,
    RepDatum,
};
use crate::torus::{
    centralizes_torus, classify_torus_case, cycles, go_wreath, sl4_wedge, sl_wreath, so_orthsum, so_pair_stab,
    TorusNormalizerDatum,
};
use crate::witness::{borel_tits_witness, parabolic_witness, SubgroupDatum};

/// Version tag written into every report and construction dump.
pub const SCHEMA: &str = "regulib-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Suite {
    #[value(name = "lemma-2.3")]
    Lemma23,
    #[value(name = "lemma-2.4")]
    Lemma24,
    #[value(name = "lemma-2.7")]
    Lemma27,
    #[value(name = "lemma-2.8")]
    Lemma28,
    #[value(name = "table-1")]
    Table1,
    #[value(name = "prop-6.1")]
    Prop61,
    #[value(name = "example-6.4")]
    Example64,
    #[value(name = "example-6.6")]
    Example66,
    #[value(name = "prop-6.7")]
    Prop67,
    #[value(name = "prop-7.1")]
    Prop71,
    #[value(name = "theorem-A")]
    TheoremA,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Lemma23,
        Suite::Lemma24,
        Suite::Lemma27,
        Suite::Lemma28,
        Suite::Table1,
        Suite::Prop61,
        Suite::Example64,
        Suite::Example66,
        Suite::Prop67,
        Suite::Prop71,
        Suite::TheoremA,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::Lemma23 => "lemma-2.3",
            Suite::Lemma24 => "lemma-2.4",
            Suite::Lemma27 => "lemma-2.7",
            Suite::Lemma28 => "lemma-2.8",
            Suite::Table1 => "table-1",
            Suite::Prop61 => "prop-6.1",
            Suite::Example64 => "example-6.4",
            Suite::Example66 => "example-6.6",
            Suite::Prop67 => "prop-6.7",
            Suite::Prop71 => "prop-7.1",
            Suite::TheoremA => "theorem-A",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.id() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Optional overrides shared by the suites; `None` selects the suite default.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteParams {
    pub p: Option<u32>,
    pub max_n: Option<usize>,
    pub l: Option<usize>,
    pub m: Option<usize>,
    pub f: Option<u32>,
    pub a: Option<u32>,
    pub d: Option<usize>,
    pub seed: u64,
    pub cap: u64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        Self {
            p: None,
            max_n: None,
            l: None,
            m: None,
            f: None,
            a: None,
            d: None,
            seed: 0,
            cap: LINE_CAP,
        }
    }
}

impl SuiteParams {
    fn primes(&self, default: &[u32]) -> Result<Vec<u32>> {
        match self.p {
            Some(p) => {
                FieldPrime::new(p)?;
                Ok(vec![p])
            }
            None => Ok(default.to_vec()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Claim {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

impl Claim {
    pub fn equal<T: Serialize + PartialEq>(name: &str, expected: T, actual: T) -> Self {
        let pass = expected == actual;
        Self::holds(name, expected, actual, pass)
    }

    pub fn holds(name: &str, expected: impl Serialize, actual: impl Serialize, pass: bool) -> Self {
        Self {
            name: name.into(),
            expected: serde_json::to_value(expected).expect("serializable"),
            actual: serde_json::to_value(actual).expect("serializable"),
            pass,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Item {
    pub id: String,
    pub params: Value,
    pub claims: Vec<Claim>,
}

impl Item {
    pub fn pass(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub suite: String,
    pub seed: u64,
    pub pass: bool,
    pub items: Vec<Item>,
    pub elapsed_ms: u64,
}

impl Report {
    /// Tab-separated rows `item, claim, expected, actual, pass`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("item\tclaim\texpected\tactual\tpass\n");
        for item in &self.items {
            for c in &item.claims {
                out.push_str(&format!("{}\t{}\t{}\t{}\t{}\n", item.id, c.name, c.expected, c.actual, c.pass));
            }
        }
        out
    }

    pub fn failures(&self) -> Vec<(&str, &Claim)> {
        self.items
            .iter()
            .flat_map(|i| i.claims.iter().filter(|c| !c.pass).map(move |c| (i.id.as_str(), c)))
            .collect()
    }
}

type Check = Box<dyn Fn() -> Result<Vec<Claim>> + Send + Sync>;

struct Spec {
    id: String,
    params: Value,
    check: Check,
}

fn spec(id: impl Into<String>, params: Value, check: impl Fn() -> Result<Vec<Claim>> + Send + Sync + 'static) -> Spec {
    Spec {
        id: id.into(),
        params,
        check: Box::new(check),
    }
}

/// Runs a suite. Errors are usage errors (invalid parameters); failed claims
/// and construction errors inside items are reported in the `Report`.
pub fn run_suite(suite: Suite, params: &SuiteParams) -> Result<Report> {
    let start = Instant::now();
    let specs = match suite {
        Suite::Lemma23 => lemma_2_3(params)?,
        Suite::Lemma24 => lemma_2_4(params)?,
        Suite::Lemma27 => lemma_2_7(),
        Suite::Lemma28 => lemma_2_8(params)?,
        Suite::Table1 => table_1(params)?,
        Suite::Prop61 => prop_6_1(params)?,
        Suite::Example64 => example_6_4(params)?,
        Suite::Example66 => example_6_6(params)?,
        Suite::Prop67 => prop_6_7(params),
        Suite::Prop71 => prop_7_1(params)?,
        Suite::TheoremA => theorem_a(params)?,
    };
    let items: Vec<Item> = specs
        .into_par_iter()
        .map(|s| {
            let claims = (s.check)().unwrap_or_else(|e| vec![Claim::holds("construction", "ok", e.to_string(), false)]);
            Item {
                id: s.id,
                params: s.params,
                claims,
            }
        })
        .collect();
    Ok(Report {
        schema: SCHEMA,
        suite: suite.id().into(),
        seed: params.seed,
        pass: items.iter().all(Item::pass),
        items,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn lemma_2_3(params: &SuiteParams) -> Result<Vec<Spec>> {
    let max_n = params.max_n.unwrap_or(24);
    let mut specs = Vec::new();
    for p in params.primes(&[2, 3, 5, 7])? {
        let f = FieldPrime::new(p)?;
        for n in 1..=max_n {
            specs.push(spec(format!("p={p},n={n}"), json!({ "p": p, "n": n }), move || {
                let parts = partitions(n);
                let mut agree = 0usize;
                let mut first_mismatch = None;
                for t in &parts {
                    let oracle = jordan_type(&t.realize(f).pow(u64::from(p)))?;
                    if jordan_power(t, p) == oracle {
                        agree += 1;
                    } else if first_mismatch.is_none() {
                        first_mismatch = Some(t.to_string());
                    }
                }
                Ok(vec![
                    Claim::equal("partitions-matching-oracle", parts.len(), agree),
                    Claim::equal("first-mismatch", None, first_mismatch),
                ])
            }));
        }
    }
    Ok(specs)
}

/// Types `[n]`, `[n-1,1]`, `[n-2,2]`.
fn near_regular(t: &JordanType) -> bool {
    let n = t.dim();
    let b = t.blocks();
    b == [n] || (n > 1 && b == [n - 1, 1]) || (n > 2 && b == [n - 2, 2])
}

fn lemma_2_4(params: &SuiteParams) -> Result<Vec<Spec>> {
    let max_ab = params.max_n.unwrap_or(16);
    let mut specs = Vec::new();
    for p in params.primes(&[2, 3, 5])? {
        let f = FieldPrime::new(p)?;
        for a in 2..=max_ab {
            for b in a..=max_ab / a {
                specs.push(spec(format!("p={p},a={a},b={b}"), json!({ "p": p, "a": a, "b": b }), move || {
                    let t = TensorTable::new(f).pair(a, b);
                    let mut claims = vec![Claim::equal("near-regular", (a, b) == (2, 2), near_regular(&t))];
                    if p == 2 && (a, b) == (2, 2) {
                        claims.push(Claim::equal("type", "2+2".to_string(), t.to_string()));
                    }
                    claims.push(Claim::holds("tensor-type", Value::Null, t.to_string(), true));
                    Ok(claims)
                }));
            }
        }
    }
    Ok(specs)
}

fn jt(s: &str) -> JordanType {
    s.parse().expect("valid partition literal")
}

fn lemma_2_7() -> Vec<Spec> {
    vec![
        spec("L2.7(2):2", json!({ "p": 2 }), || {
            let d = tensor_wreath(2)?;
            Ok(vec![Claim::equal("jordan-type", jt("4"), d.jordan_type()?)])
        }),
        spec("L2.7(2):3", json!({ "p": 3 }), || {
            let d = tensor_wreath(3)?;
            let j = Matrix::jordan_block(d.field(), 2);
            let jjj = j.kronecker(&j)?.kronecker(&j)?;
            Ok(vec![
                Claim::equal("jordan-type", jt("8"), d.jordan_type()?),
                Claim::equal("u^p is J2 on every factor", true, d.u.pow(3) == jjj),
            ])
        }),
        spec("L2.7(3)", json!({ "p": 2 }), || {
            let d = tensor_swap9()?;
            let sq = d.u.pow(2);
            let j3 = Matrix::jordan_block(d.field(), 3);
            Ok(vec![
                Claim::equal("jordan-type", jt("8+1"), d.jordan_type()?),
                Claim::equal("square-type", jt("4+4+1"), jordan_type(&sq)?),
                Claim::equal("square is J3 (x) J3", true, sq == j3.kronecker(&j3)?),
            ])
        }),
    ]
}

fn regular_claims(rep: &RegularRep, dickson: Option<u8>) -> Result<Vec<Claim>> {
    let mut claims = vec![
        Claim::equal("jordan-type", rep.expected_type.clone(), rep.jordan_type()?),
        Claim::equal(
            "preserves-form",
            true,
            match &rep.form {
                Some(f) => f.is_isometry(&rep.u)?,
                None => true,
            },
        ),
    ];
    if let Some(d) = dickson {
        claims.push(Claim::equal("dickson", Some(d), rep.dickson()));
    }
    Ok(claims)
}

fn lemma_2_8(params: &SuiteParams) -> Result<Vec<Spec>> {
    let max_l = params.l.unwrap_or(5);
    let max_sl = params.max_n.unwrap_or(8);
    let seed = params.seed;
    let mut specs = Vec::new();
    for p in params.primes(&[2, 3])? {
        for n in 2..=max_sl {
            let want = expected_block_pattern(GroupTag::Sl, n, p);
            specs.push(spec(format!("SL:n={n},p={p}"), json!({ "n": n, "p": p }), move || {
                let rep = regular_in_sl(n, p)?;
                let mut c = regular_claims(&rep, None)?;
                c.push(Claim::equal("pattern", want.clone(), rep.jordan_type()?));
                Ok(c)
            }));
        }
        for l in 1..=max_l {
            specs.push(spec(format!("Sp:l={l},p={p}"), json!({ "l": l, "p": p }), move || {
                regular_claims(&regular_in_sp(2 * l, p)?, None)
            }));
            let n = 2 * l + 1;
            let want = expected_block_pattern(GroupTag::SoOdd, n, p);
            specs.push(spec(format!("SO:n={n},p={p}"), json!({ "n": n, "p": p }), move || {
                let rep = regular_in_so(n, p)?;
                let mut c = regular_claims(&rep, None)?;
                c.push(Claim::equal("pattern", want.clone(), rep.jordan_type()?));
                Ok(c)
            }));
            if l >= 3 {
                let n = 2 * l;
                let want = expected_block_pattern(GroupTag::SoEven, n, p);
                specs.push(spec(format!("SO:n={n},p={p}"), json!({ "n": n, "p": p }), move || {
                    let rep = regular_in_so(n, p)?;
                    let mut c = regular_claims(&rep, (p == 2).then_some(0))?;
                    c.push(Claim::equal("pattern", want.clone(), rep.jordan_type()?));
                    Ok(c)
                }));
            }
            if p == 2 && l >= 2 {
                specs.push(spec(format!("GO-outer:l={l}"), json!({ "l": l, "p": 2 }), move || {
                    regular_claims(&go_outer_regular(2 * l)?, Some(1))
                }));
            }
            if p == 2 && l >= 3 {
                let want = expected_block_pattern(GroupTag::GlStabOuter, l, 2);
                specs.push(spec(format!("GLl.2-outer:l={l}"), json!({ "l": l, "p": 2, "seed": seed }), move || {
                    let rep = gl_stab_outer(l, seed)?;
                    let mut c = regular_claims(&rep, None)?;
                    c.push(Claim::equal("pattern", want.clone(), rep.jordan_type()?));
                    Ok(c)
                }));
            }
        }
    }
    Ok(specs)
}

fn table_claims(d: &RepDatum, cap: u64) -> Result<Vec<Claim>> {
    let action = d.action()?;
    let irr = action.is_absolutely_irreducible(cap)?;
    let order = d.order()?;
    let mut form_ok = true;
    if let Some(form) = &d.form {
        for g in d.generators.iter().chain(std::iter::once(&d.u)) {
            form_ok &= match form {
                crate::reptable::RepForm::Symplectic(s) => crate::forms::FormSpace::is_isometry(s, g)?,
                crate::reptable::RepForm::Quadratic(q) => crate::forms::FormSpace::is_isometry(q, g)?,
            };
        }
    }
    Ok(vec![
        Claim::equal("dim", d.expected_type.dim(), d.dim),
        Claim::equal("jordan-type", d.expected_type.clone(), d.jordan_type()?),
        Claim::holds("order", d.order_bound.to_string(), order, d.order_bound.holds(order)),
        Claim::equal("preserves-form", true, form_ok),
        Claim::equal("irreducible", true, irr.irreducible),
        Claim::equal("commutant-dimension", 1, irr.commutant_dimension),
    ])
}

fn rep_spec(id: String, params: Value, cap: u64, build: impl Fn() -> Result<RepDatum> + Send + Sync + 'static) -> Spec {
    spec(id, params, move || table_claims(&build()?, cap))
}

fn table_1(params: &SuiteParams) -> Result<Vec<Spec>> {
    let max_l = params.l.unwrap_or(4);
    let cap = params.cap;
    let mut specs = Vec::new();
    for (m, p) in [(1, 2), (2, 3), (4, 5)] {
        specs.push(rep_spec(format!("A1:sym:{m}:{p}"), json!({ "m": m, "p": p }), cap, move || {
            sym_power_rep(m, p)
        }));
    }
    for p in params.primes(&[2, 3])? {
        for l in 1..=max_l {
            let mut fams = vec![Family::A];
            if l >= 2 {
                if p != 2 {
                    fams.push(Family::B);
                }
                fams.push(Family::C);
            }
            if l >= 3 && p == 2 {
                fams.push(Family::D2);
            }
            for fam in fams {
                let tag = match fam {
                    Family::A => "Al",
                    Family::B => "Bl",
                    Family::C => "Cl",
                    Family::D2 => "Dl.2",
                };
                specs.push(rep_spec(
                    format!("{tag}:nat:{l}:{p}"),
                    json!({ "family": tag, "l": l, "p": p }),
                    cap,
                    move || natural_rep(fam, l, p),
                ));
            }
        }
    }
    for p in [2, 3] {
        let id = if p == 2 { "G2:6:2".to_string() } else { format!("G2:7:{p}") };
        specs.push(rep_spec(id, json!({ "p": p }), cap, move || g2_rep(p)));
    }
    specs.push(rep_spec("A2.2:adj:2".into(), json!({ "p": 2 }), cap, a2_adjoint_outer));
    Ok(specs)
}

/// All `(a, d)` with `p^a d <= max_n`.
fn wreath_params(p: u32, max_n: usize) -> Vec<(u32, usize)> {
    let mut out = Vec::new();
    let mut a = 1u32;
    while (p as usize).pow(a) <= max_n {
        let q = (p as usize).pow(a);
        for d in 1..=max_n / q {
            out.push((a, d));
        }
        a += 1;
    }
    out
}

fn witness_exists(d: &TorusNormalizerDatum, cap: u64) -> Result<bool> {
    Ok(parabolic_witness(&SubgroupDatum::from(d), cap)?.is_some())
}

fn prop_6_1(params: &SuiteParams) -> Result<Vec<Spec>> {
    let max_n = params.max_n.unwrap_or(16);
    let cap = params.cap;
    let mut specs = Vec::new();
    for p in params.primes(&[2, 3])? {
        for (a, d) in wreath_params(p, max_n) {
            if params.a.is_some_and(|x| x != a) || params.d.is_some_and(|x| x != d) {
                continue;
            }
            specs.push(spec(format!("p={p},a={a},d={d}"), json!({ "p": p, "a": a, "d": d }), move || {
                let datum = sl_wreath(p, a, d)?;
                let q = (p as usize).pow(a);
                let n = q * d;
                let valid = datum.validate();
                let cls = classify_torus_case(&datum)?;
                Ok(vec![
                    Claim::equal("normalizes-torus", "ok".to_string(), valid.map(|_| "ok".to_string()).unwrap_or_else(|e| e.to_string())),
                    Claim::equal("jordan-type", JordanType::single(n), datum.jordan_type()?),
                    Claim::equal("torus-rank", q - 1, datum.torus.lattice_rank()),
                    Claim::equal("weight-dims", vec![d; q], cls.weight_dims.clone()),
                    Claim::equal("parabolic-witness", d > 1, witness_exists(&datum, cap)?),
                ])
            }));
        }
    }
    Ok(specs)
}

fn example_6_4(params: &SuiteParams) -> Result<Vec<Spec>> {
    let cases = match (params.m, params.f) {
        (Some(m), Some(f)) => vec![(m, f)],
        (None, None) => vec![(3, 1), (5, 1), (3, 2)],
        _ => return Err(Error::InvalidParams("example-6.4 takes both --m and --f or neither".into())),
    };
    let (seed, cap) = (params.seed, params.cap);
    Ok(cases
        .into_iter()
        .map(|(m, f)| {
            spec(format!("m={m},f={f}"), json!({ "m": m, "f": f, "seed": seed }), move || {
                let d = go_wreath(m, f, seed)?;
                d.validate()?;
                let l = (1usize << f) * m;
                let z = d.u.pow(1 << (f + 1));
                let s = SubgroupDatum::from(&d);
                let cls = classify_torus_case(&d)?;
                Ok(vec![
                    Claim::equal("jordan-type", JordanType::single(2 * l), d.jordan_type()?),
                    Claim::equal("u^(2^(f+1)) != 1", true, !z.is_identity()),
                    Claim::equal("u^(2^(f+1)) centralizes T", true, centralizes_torus(&z, &d.torus)),
                    Claim::equal("parabolic-witness", true, parabolic_witness(&s, cap)?.is_some()),
                    Claim::equal("centralized-unipotent", true, borel_tits_witness(&s).is_some()),
                    Claim::equal("case", format!("paired-singular:r={}", 2 << f), cls.case.to_string()),
                ])
            })
        })
        .collect())
}

/// Jordan type of `g` restricted to each weight space, in weight-space order.
fn types_on_weight_spaces(d: &TorusNormalizerDatum, g: &Matrix) -> Result<Vec<JordanType>> {
    d.torus
        .weight_spaces()
        .iter()
        .map(|w| {
            let r = g
                .restrict_to(w.space.basis())?
                .ok_or_else(|| Error::Validation("weight space is not invariant".into()))?;
            jordan_type(&r)
        })
        .collect()
}

fn pair_stab_claims(l: usize, seed: u64, cap: u64) -> Result<Vec<Claim>> {
    let d = so_pair_stab(l, seed)?;
    d.validate()?;
    let sq = d.u.pow(2);
    let half = JordanType::new(vec![l - 1, 1])?;
    let dickson = match &d.ambient {
        crate::torus::Ambient::So { form } => crate::forms::dickson(&d.u, form)?,
        _ => unreachable!(),
    };
    Ok(vec![
        Claim::equal("jordan-type", JordanType::new(vec![2 * l - 2, 2])?, d.jordan_type()?),
        Claim::equal("dickson", 0, dickson),
        Claim::equal("u^2 != 1 centralizes T", true, !sq.is_identity() && centralizes_torus(&sq, &d.torus)),
        Claim::equal("u^2 on each weight space", vec![half.clone(), half], types_on_weight_spaces(&d, &sq)?),
        Claim::equal("case", "so-case-1".to_string(), classify_torus_case(&d)?.case.to_string()),
        Claim::equal("parabolic-witness", true, witness_exists(&d, cap)?),
    ])
}

fn example_6_6(params: &SuiteParams) -> Result<Vec<Spec>> {
    let (seed, cap) = (params.seed, params.cap);
    let ls = match params.l {
        Some(l) => vec![l],
        None => vec![4, 6],
    };
    let mut specs: Vec<Spec> = ls
        .into_iter()
        .map(|l| spec(format!("so-pair-stab:l={l}"), json!({ "l": l, "seed": seed }), move || pair_stab_claims(l, seed, cap)))
        .collect();
    specs.push(spec("so-orthsum:l=5", json!({ "l": 5 }), move || {
        let d = so_orthsum(5)?;
        d.validate()?;
        let cls = classify_torus_case(&d)?;
        let zero = d
            .torus
            .weight_spaces()
            .iter()
            .find(|w| w.weight.iter().all(|&x| x == 0))
            .map_or(0, |w| w.space.dim());
        let nonzero_orbit = cls.orbits.iter().map(Vec::len).max().unwrap_or(0);
        Ok(vec![
            Claim::equal("jordan-type", jt("8+2"), d.jordan_type()?),
            Claim::equal("case", "so-case-2".to_string(), cls.case.to_string()),
            Claim::equal("zero-weight-dim", 2, zero),
            Claim::equal("orbit on nonzero weight spaces", 8, nonzero_orbit),
            // exhaustive search; see the README on this datum
            Claim::equal("invariant-totally-singular-subspace", false, witness_exists(&d, cap)?),
        ])
    }));
    specs.push(spec("sl4-wedge", json!({}), move || {
        let d = sl4_wedge()?;
        let perm = d.validate()?;
        let cls = classify_torus_case(&d)?;
        let mut dims = cls.weight_dims.clone();
        dims.sort_unstable();
        let swapped = cycles(&perm).iter().any(|c| c.len() == 2);
        Ok(vec![
            Claim::equal("jordan-type", jt("4+2"), d.jordan_type()?),
            Claim::equal("case", "so-case-3".to_string(), cls.case.to_string()),
            Claim::equal("weight-dims", vec![1, 1, 4], dims),
            Claim::equal("u swaps the opposed lines", true, swapped),
            Claim::equal("parabolic-witness", true, witness_exists(&d, cap)?),
        ])
    }));
    Ok(specs)
}

fn prop_6_7(params: &SuiteParams) -> Vec<Spec> {
    let seed = params.seed;
    let mut specs = Vec::new();
    for l in [4, 6, 8] {
        specs.push(spec(format!("so-pair-stab:l={l}"), json!({ "l": l, "seed": seed }), move || {
            let d = so_pair_stab(l, seed)?;
            d.validate()?;
            let sq = d.u.pow(2);
            let half = JordanType::new(vec![l - 1, 1])?;
            Ok(vec![
                Claim::equal("case", "so-case-1".to_string(), classify_torus_case(&d)?.case.to_string()),
                Claim::equal("u^2 on each weight space", vec![half.clone(), half], types_on_weight_spaces(&d, &sq)?),
            ])
        }));
    }
    for l in [5, 9] {
        specs.push(spec(format!("so-orthsum:l={l}"), json!({ "l": l }), move || {
            let d = so_orthsum(l)?;
            d.validate()?;
            let cls = classify_torus_case(&d)?;
            Ok(vec![
                Claim::equal("jordan-type", JordanType::new(vec![2 * l - 2, 2])?, d.jordan_type()?),
                Claim::equal("case", "so-case-2".to_string(), cls.case.to_string()),
            ])
        }));
    }
    specs.push(spec("sl4-wedge", json!({}), || {
        let d = sl4_wedge()?;
        d.validate()?;
        Ok(vec![Claim::equal("case", "so-case-3".to_string(), classify_torus_case(&d)?.case.to_string())])
    }));
    specs
}

fn prop_7_1(params: &SuiteParams) -> Result<Vec<Spec>> {
    let cases = match (params.p, params.a) {
        (Some(p), Some(a)) => vec![(p, a)],
        (None, None) => vec![(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1), (7, 1)],
        _ => return Err(Error::InvalidParams("prop-7.1 takes both --p and --a or neither".into())),
    };
    for &(p, a) in &cases {
        FieldPrime::new(p)?;
        if a == 0 {
            return Err(Error::InvalidParams("a must be at least 1".into()));
        }
    }
    Ok(cases
        .into_iter()
        .map(|(p, a)| {
            spec(format!("p={p},a={a}"), json!({ "p": p, "a": a }), move || {
                let w = order_witness(p, a)?;
                let q = u64::from(p).pow(a);
                let phi = u64::from(p).pow(a - 1) * u64::from(p - 1);
                Ok(vec![
                    Claim::equal("size", phi, w.matrix.len() as u64),
                    Claim::equal("order", q, w.order),
                    Claim::equal("min-torus-dim", phi, w.bound),
                ])
            })
        })
        .collect())
}

type TorusBuilder = Box<dyn Fn() -> Result<TorusNormalizerDatum> + Send + Sync>;

fn theorem_a(params: &SuiteParams) -> Result<Vec<Spec>> {
    let (seed, cap) = (params.seed, params.cap);
    let mut specs = Vec::new();
    let mut reps: Vec<RepDatum> = table_rows(params.l.unwrap_or(4), &params.primes(&[2, 3])?)?;
    reps.push(tensor_wreath(2)?);
    reps.push(tensor_wreath(3)?);
    reps.push(tensor_swap9()?);
    for d in reps {
        specs.push(spec(d.row_tag.clone(), json!({ "p": d.p, "dim": d.dim }), move || {
            let w = parabolic_witness(&d.subgroup(), cap)?;
            Ok(vec![Claim::equal("parabolic-witness", false, w.is_some())])
        }));
    }
    let mut tori: Vec<(String, TorusBuilder, Option<bool>)> = Vec::new();
    for p in [2u32, 3] {
        for (a, d) in wreath_params(p, 16) {
            tori.push((format!("sl-wreath:p={p},a={a},d={d}"), Box::new(move || sl_wreath(p, a, d)), Some(d > 1)));
        }
    }
    for (m, f) in [(3, 1), (5, 1), (3, 2)] {
        tori.push((format!("go-wreath:m={m},f={f}"), Box::new(move || go_wreath(m, f, seed)), Some(true)));
    }
    for l in [4, 6] {
        tori.push((format!("so-pair-stab:l={l}"), Box::new(move || so_pair_stab(l, seed)), Some(true)));
    }
    tori.push(("sl4-wedge".into(), Box::new(sl4_wedge), Some(true)));
    tori.push(("so-orthsum:l=5".into(), Box::new(|| so_orthsum(5)), None));
    for (id, build, expected) in tori {
        specs.push(spec(id, json!({ "seed": seed }), move || {
            let d = build()?;
            let s = SubgroupDatum::from(&d);
            let subspace = parabolic_witness(&s, cap)?;
            if let Some(w) = &subspace {
                if !w.verify(&s) {
                    return Err(Error::Validation("witness failed re-verification".into()));
                }
            }
            let centralized = borel_tits_witness(&s).is_some();
            let mut claims = vec![Claim::holds(
                "centralized unipotent implies subspace witness",
                true,
                json!({ "centralized-unipotent": centralized, "subspace": subspace.is_some() }),
                !centralized || subspace.is_some(),
            )];
            if let Some(e) = expected {
                claims.push(Claim::equal("parabolic-witness", e, subspace.is_some()));
            }
            Ok(claims)
        }));
    }
    Ok(specs)
}

/// Construction ids accepted by [`construct`].
pub const CONSTRUCTIONS: [&str; 19] = [
    "sl-wreath",
    "go-wreath",
    "so-pair-stab",
    "so-orthsum",
    "sl4-wedge",
    "gl-stab-outer",
    "regular-sl",
    "regular-sp",
    "regular-so",
    "go-outer",
    "g2",
    "a2-outer",
    "sym-power",
    "natural",
    "tensor-wreath",
    "tensor-swap9",
    "cyclotomic",
    "power-map",
    "tensor-type",
];

/// Parameters of a construction; which fields are required depends on the id.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConstructParams {
    pub p: Option<u32>,
    pub n: Option<usize>,
    pub l: Option<usize>,
    pub m: Option<usize>,
    pub f: Option<u32>,
    pub a: Option<u32>,
    pub d: Option<usize>,
    pub family: Option<String>,
    pub partition: Option<String>,
    pub partition2: Option<String>,
    pub seed: u64,
    pub cap: u64,
}

fn need<T: Copy>(v: Option<T>, flag: &str, id: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidParams(format!("{id} requires --{flag}")))
}

fn torus_json(d: &TorusNormalizerDatum, cap: u64) -> Result<Value> {
    let perm = d.validate()?;
    let witness = parabolic_witness(&SubgroupDatum::from(d), cap)?;
    let case = classify_torus_case(d)?;
    Ok(json!({
        "schema": SCHEMA,
        "construction": d.construction,
        "params": d.params_json(),
        "p": d.p(),
        "dim": d.dim(),
        "torus_rank": d.torus.rank(),
        "weights": d.torus.weights(),
        "jordan_type": d.jordan_type()?,
        "weight_permutation": perm,
        "case_tag": case.case.to_string(),
        "witness": witness,
        "u": d.u.to_rows_u32(),
        "ambient": d.ambient,
    }))
}

fn rep_json(d: &RepDatum) -> Result<Value> {
    let mut v = serde_json::to_value(d).expect("serializable");
    let obj = v.as_object_mut().expect("object");
    obj.insert("schema".into(), SCHEMA.into());
    obj.insert("jordan_type".into(), serde_json::to_value(d.jordan_type()?).expect("serializable"));
    obj.insert("order".into(), d.order()?.into());
    Ok(v)
}

fn regular_json(id: &str, r: &RegularRep) -> Result<Value> {
    let mut v = r.to_json()?;
    let obj = v.as_object_mut().expect("object");
    obj.insert("schema".into(), SCHEMA.into());
    obj.insert("construction".into(), id.into());
    Ok(v)
}

/// Builds the datum named by `id` and serialises it.
pub fn construct(id: &str, c: &ConstructParams) -> Result<Value> {
    match id {
        "sl-wreath" => torus_json(&sl_wreath(need(c.p, "p", id)?, need(c.a, "a", id)?, need(c.d, "d", id)?)?, c.cap),
        "go-wreath" => torus_json(&go_wreath(need(c.m, "m", id)?, need(c.f, "f", id)?, c.seed)?, c.cap),
        "so-pair-stab" => torus_json(&so_pair_stab(need(c.l, "l", id)?, c.seed)?, c.cap),
        "so-orthsum" => torus_json(&so_orthsum(need(c.l, "l", id)?)?, c.cap),
        "sl4-wedge" => torus_json(&sl4_wedge()?, c.cap),
        "gl-stab-outer" => regular_json(id, &gl_stab_outer(need(c.l, "l", id)?, c.seed)?),
        "regular-sl" => regular_json(id, &regular_in_sl(need(c.n, "n", id)?, need(c.p, "p", id)?)?),
        "regular-sp" => regular_json(id, &regular_in_sp(2 * need(c.l, "l", id)?, need(c.p, "p", id)?)?),
        "regular-so" => regular_json(id, &regular_in_so(need(c.n, "n", id)?, need(c.p, "p", id)?)?),
        "go-outer" => regular_json(id, &go_outer_regular(2 * need(c.l, "l", id)?)?),
        "g2" => rep_json(&g2_rep(need(c.p, "p", id)?)?),
        "a2-outer" => rep_json(&a2_adjoint_outer()?),
        "sym-power" => rep_json(&sym_power_rep(need(c.m, "m", id)?, need(c.p, "p", id)?)?),
        "natural" => {
            let fam: Family = c
                .family
                .as_deref()
                .ok_or_else(|| Error::InvalidParams("natural requires --family".into()))?
                .parse()
                .map_err(|e: Error| Error::InvalidParams(e.to_string()))?;
            rep_json(&natural_rep(fam, need(c.l, "l", id)?, need(c.p, "p", id)?)?)
        }
        "tensor-wreath" => rep_json(&tensor_wreath(need(c.p, "p", id)?)?),
        "tensor-swap9" => rep_json(&tensor_swap9()?),
        "cyclotomic" => {
            let w = order_witness(need(c.p, "p", id)?, need(c.a, "a", id)?)?;
            let mut v = serde_json::to_value(w).expect("serializable");
            v.as_object_mut().expect("object").insert("schema".into(), SCHEMA.into());
            Ok(v)
        }
        "power-map" => {
            let p = need(c.p, "p", id)?;
            let f = FieldPrime::new(p)?;
            let t: JordanType = parse_partition(c.partition.as_deref(), id)?;
            Ok(json!({
                "schema": SCHEMA,
                "partition": t,
                "p": p,
                "power": jordan_power(&t, p),
                "oracle": jordan_type(&t.realize(f).pow(u64::from(p)))?,
            }))
        }
        "tensor-type" => {
            let p = need(c.p, "p", id)?;
            let f = FieldPrime::new(p)?;
            let s = parse_partition(c.partition.as_deref(), id)?;
            let t = parse_partition(c.partition2.as_deref().or(c.partition.as_deref()), id)?;
            Ok(json!({
                "schema": SCHEMA,
                "left": s,
                "right": t,
                "p": p,
                "tensor": crate::jordan::jordan_tensor(&s, &t, f),
            }))
        }
        _ => Err(Error::InvalidParams(format!(
            "unknown construction {id:?}; expected one of {}",
            CONSTRUCTIONS.join(", ")
        ))),
    }
}

fn parse_partition(s: Option<&str>, id: &str) -> Result<JordanType> {
    s.ok_or_else(|| Error::InvalidParams(format!("{id} requires --partition")))?
        .parse()
        .map_err(|e: Error| Error::InvalidParams(e.to_string()))
}

/// Flattens a construction dump into `key<TAB>value` rows, compact JSON for
/// nested values.
pub fn to_tsv(v: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = v {
        for (k, val) in map {
            let s = match val {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k}\t{s}\n"));
        }
    }
    out
}
