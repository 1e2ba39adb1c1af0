//! Acceptance criteria. Each runs the matching verification suite at its
//! default parameters, adds a few direct checks, and must finish inside its
//! time limit. Prints one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use regulib::classical::{expected_block_pattern, gl_stab_outer, GroupTag};
use regulib::cyclotomic::{cyclotomic_companion, integer_matrix_order};
use regulib::jordan::{jordan_type, JordanType, TensorTable};
use regulib::report::{run_suite, Suite, SuiteParams};
use regulib::reptable::{tensor_swap9, tensor_wreath};
use regulib::torus::{classify_torus_case, so_orthsum, so_pair_stab, sl4_wedge};
use regulib::FieldPrime;

type Check = Box<dyn Fn() -> Vec<String>>;

struct Criterion {
    number: u32,
    title: &'static str,
    limit: Duration,
    check: Check,
}

fn jt(s: &str) -> JordanType {
    s.parse().unwrap()
}

/// Violations reported by `suite` at its defaults, one string each.
fn suite_failures(suite: Suite) -> Vec<String> {
    match run_suite(suite, &SuiteParams::default()) {
        Ok(r) if r.items.is_empty() => vec![format!("{}: no items", suite.id())],
        Ok(r) => r
            .failures()
            .into_iter()
            .map(|(id, c)| format!("{}: {id}: {} expected {} got {}", suite.id(), c.name, c.expected, c.actual))
            .collect(),
        Err(e) => vec![format!("{}: {e}", suite.id())],
    }
}

fn expect(failures: &mut Vec<String>, ok: bool, what: impl Into<String>) {
    if !ok {
        failures.push(what.into());
    }
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            number: 1,
            title: "power map agrees with the matrix oracle, n <= 24, p in {2,3,5,7}",
            limit: Duration::from_secs(60),
            check: Box::new(|| suite_failures(Suite::Lemma23)),
        },
        Criterion {
            number: 2,
            title: "tensor [a]x[b] near-regular only for (2,2), ab <= 16, p in {2,3,5}",
            limit: Duration::from_secs(30),
            check: Box::new(|| {
                let mut f = suite_failures(Suite::Lemma24);
                let t = TensorTable::new(FieldPrime::new(2).unwrap()).pair(2, 2);
                expect(&mut f, t == jt("2+2"), format!("[2]x[2] at p=2 is {t}"));
                f
            }),
        },
        Criterion {
            number: 3,
            title: "regular block patterns in SL, Sp, SO, GO-outer, GL.2-outer",
            limit: Duration::from_secs(60),
            check: Box::new(|| {
                let mut f = suite_failures(Suite::Lemma28);
                for (l, want) in [(3, "6"), (4, "6+2")] {
                    let got = gl_stab_outer(l, 0).and_then(|r| r.jordan_type());
                    let ok = matches!(&got, Ok(t) if *t == jt(want) && *t == expected_block_pattern(GroupTag::GlStabOuter, l, 2));
                    expect(&mut f, ok, format!("GL.2-outer l={l}: {got:?}"));
                }
                f
            }),
        },
        Criterion {
            number: 4,
            title: "representation table rows",
            limit: Duration::from_secs(120),
            check: Box::new(|| suite_failures(Suite::Table1)),
        },
        Criterion {
            number: 5,
            title: "SL wreath tori: single block, rank p^a-1, witness iff d > 1",
            limit: Duration::from_secs(120),
            check: Box::new(|| suite_failures(Suite::Prop61)),
        },
        Criterion {
            number: 6,
            title: "GO wreath tori (m,f) in {(3,1),(5,1),(3,2)}",
            limit: Duration::from_secs(120),
            check: Box::new(|| suite_failures(Suite::Example64)),
        },
        Criterion {
            number: 7,
            title: "SO torus normaliser classifications",
            limit: Duration::from_secs(30),
            check: Box::new(|| {
                let mut f = suite_failures(Suite::Example66);
                f.extend(suite_failures(Suite::Prop67));
                let case = |d: regulib::Result<_>| classify_torus_case(&d?).map(|c| c.case.to_string());
                for l in [4, 6] {
                    let c = case(so_pair_stab(l, 0));
                    expect(&mut f, matches!(&c, Ok(s) if s == "so-case-1"), format!("so-pair-stab({l}): {c:?}"));
                }
                let c = case(so_orthsum(5));
                expect(&mut f, matches!(&c, Ok(s) if s == "so-case-2"), format!("so-orthsum(5): {c:?}"));
                let c = case(sl4_wedge());
                expect(&mut f, matches!(&c, Ok(s) if s == "so-case-3"), format!("sl4-wedge: {c:?}"));
                f
            }),
        },
        Criterion {
            number: 8,
            title: "tensor constructions [4], [8], [8,1] with square [4,4,1]",
            limit: Duration::from_secs(10),
            check: Box::new(|| {
                let mut f = suite_failures(Suite::Lemma27);
                for (d, want) in [(tensor_wreath(2), "4"), (tensor_wreath(3), "8"), (tensor_swap9(), "8+1")] {
                    match d.and_then(|d| jordan_type(&d.u)) {
                        Ok(t) => expect(&mut f, t == jt(want), format!("expected {want}, got {t}")),
                        Err(e) => f.push(e.to_string()),
                    }
                }
                match tensor_swap9().and_then(|d| jordan_type(&d.u.pow(2))) {
                    Ok(t) => expect(&mut f, t == jt("4+4+1"), format!("swap9 square is {t}")),
                    Err(e) => f.push(e.to_string()),
                }
                f
            }),
        },
        Criterion {
            number: 9,
            title: "cyclotomic companions: size phi(p^a), integer order p^a",
            limit: Duration::from_secs(5),
            check: Box::new(|| {
                let mut f = suite_failures(Suite::Prop71);
                for (p, a) in [(2u32, 1u32), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1), (7, 1)] {
                    let q = u64::from(p).pow(a);
                    match cyclotomic_companion(p, a) {
                        Ok(m) => {
                            expect(&mut f, m.len() as u64 == q / u64::from(p) * u64::from(p - 1), format!("size at {p}^{a}"));
                            let order = integer_matrix_order(&m, 2 * q);
                            expect(&mut f, matches!(order, Ok(Some(o)) if o == q), format!("order at {p}^{a}: {order:?}"));
                        }
                        Err(e) => f.push(e.to_string()),
                    }
                }
                f
            }),
        },
        Criterion {
            number: 10,
            title: "no parabolic witness for table data; witnesses for torus data",
            limit: Duration::from_secs(300),
            check: Box::new(|| suite_failures(Suite::TheoremA)),
        },
    ]
}

/// Criteria that cannot hold as stated, with their exact violations. Such a
/// criterion still prints FAIL; the run fails only if the violations change.
const KNOWN_VIOLATIONS: &[(u32, &[&str])] = &[(
    2,
    &[
        "lemma-2.4: p=2,a=2,b=3: near-regular expected false got true",
        "lemma-2.4: p=5,a=2,b=3: near-regular expected false got true",
    ],
)];

fn main() -> ExitCode {
    let mut all = true;
    for c in criteria() {
        let start = Instant::now();
        let mut failures = (c.check)();
        let elapsed = start.elapsed();
        if elapsed > c.limit {
            failures.push(format!("took {elapsed:.2?}, limit {:?}", c.limit));
        }
        let known = KNOWN_VIOLATIONS
            .iter()
            .any(|(n, v)| *n == c.number && failures.iter().map(String::as_str).eq(v.iter().copied()));
        let verdict = match (failures.is_empty(), known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known counterexample)",
            (false, false) => "FAIL",
        };
        println!("criterion {}: {verdict} ({}) [{elapsed:.2?}]", c.number, c.title);
        for f in &failures {
            println!("    {f}");
        }
        all &= failures.is_empty() || known;
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
