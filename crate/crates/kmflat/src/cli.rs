//! Command-line front end: JSON in, JSON (or DOT) out. Exit code 0 on
//! success, 1 on domain errors (with a JSON error object on stdout), 2 on
//! usage problems, unreadable files or malformed input. Timing goes to
//! stderr so stdout stays byte-stable.

use crate::flat::{check_loos_axioms, flat_distance, mu_flat, sample_flat_points};
use crate::gcm::{classify, symmetrize, validate_gcm, GcmError, GcmMatrix};
use crate::horizon::{Half, HorizonComplex};
use crate::linalg::{rat_from_str, rat_to_string, Rat};
use crate::local::diagram_automorphisms;
use crate::realization::{build_realization, RealFormPoint};
use crate::sl2::{
    is_symmetric_element, iwasawa_decompose, IwasawaOrder, Sl2, SymmetricVerdict,
};
use crate::weyl::WeylGroup;
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_complex::Complex64;
use rand::SeedableRng;
use serde_json::{json, Value};
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "kmflat", version, about = "Kac-Moody flat geometry toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a generalized Cartan matrix (finite/affine/indefinite)
    Classify {
        #[arg(long)]
        gcm: PathBuf,
    },
    /// Compute a symmetrizer D with A = D B
    Symmetrize {
        #[arg(long)]
        gcm: PathBuf,
    },
    /// Build the extended realization (coroots, roots, bilinear form)
    Realize {
        #[arg(long)]
        gcm: PathBuf,
    },
    /// Enumerate real roots up to a height
    Roots {
        #[arg(long)]
        gcm: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_height: i64,
        /// Restrict the list to positive roots
        #[arg(long, default_value_t = false)]
        positive_only: bool,
    },
    /// Canonical form, length and matrix of a Weyl word (1-based indices)
    Weyl {
        #[arg(long)]
        gcm: PathBuf,
        #[arg(long)]
        word: String,
    },
    /// Tits cone membership of a point by greedy descent
    TitsCone {
        #[arg(long)]
        gcm: PathBuf,
        /// Rational coordinates, e.g. "1,0,-2"
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, default_value_t = 200)]
        max_steps: usize,
    },
    /// Singular-locus membership within a root height window
    Singular {
        #[arg(long)]
        gcm: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, default_value_t = 6)]
        max_height: i64,
    },
    /// Check the symmetric-space axioms on seeded flat samples
    CheckAxioms {
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Iwasawa decomposition of an SL(2) matrix
    Iwasawa {
        /// Four entries "a,b,c,d"; each real or complex like "1+2i"
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, default_value = "UAK")]
        order: String,
    },
    /// Symmetric-element test with spectrum
    SymmetricElement {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Diagram automorphisms versus Coxeter-system automorphisms
    DiagramAuts {
        #[arg(long)]
        gcm: PathBuf,
    },
    /// Realize the horizon fan of spherical residues in a ball
    RealizeFan {
        #[arg(long)]
        gcm: PathBuf,
        #[arg(long, default_value_t = 4)]
        radius: usize,
        /// "json" for the cell list, "dot" for the residue poset
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Asymptote-class test for two pointed cells of the fan
    Parallel {
        #[arg(long)]
        gcm: PathBuf,
        #[arg(long, default_value_t = 4)]
        radius: usize,
        /// Word of the first cell, 1-based, empty for the identity
        #[arg(long, default_value = "")]
        word1: String,
        /// Color set J of the first cell, 1-based
        #[arg(long, default_value = "")]
        j1: String,
        #[arg(long, allow_hyphen_values = true)]
        point1: String,
        #[arg(long, default_value = "")]
        word2: String,
        #[arg(long, default_value = "")]
        j2: String,
        #[arg(long, allow_hyphen_values = true)]
        point2: String,
    },
}

#[derive(Debug)]
enum Failure {
    /// Exit 2: bad invocation, unreadable file, malformed input.
    Usage(String),
    /// Exit 1: well-formed input rejected by the mathematics.
    Domain(Value),
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn domain(kind: &str, message: impl std::fmt::Display) -> Failure {
    Failure::Domain(json!({ "kind": kind, "message": message.to_string() }))
}

fn load_gcm(path: &PathBuf) -> Result<GcmMatrix, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| usage(format!("malformed JSON in {}: {e}", path.display())))?;
    let rows = v
        .get("gcm")
        .and_then(Value::as_array)
        .ok_or_else(|| usage(format!("{}: expected {{\"gcm\": [[...]]}}", path.display())))?;
    let mut raw = Vec::new();
    for row in rows {
        let row = row
            .as_array()
            .ok_or_else(|| usage("gcm rows must be arrays"))?;
        let mut r = Vec::new();
        for x in row {
            let n = x.as_i64().ok_or_else(|| usage("gcm entries must be integers"))?;
            r.push(BigInt::from(n));
        }
        raw.push(r);
    }
    validate_gcm(raw).map_err(gcm_domain)
}

fn gcm_domain(e: GcmError) -> Failure {
    domain("InvalidGcm", e)
}

fn parse_rat_vec(s: &str) -> Result<Vec<Rat>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| rat_from_str(t).ok_or_else(|| usage(format!("bad rational '{t}'"))))
        .collect()
}

/// 1-based comma-separated indices.
fn parse_indices(s: &str, n: usize) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let k: usize = t.parse().map_err(|_| usage(format!("bad index '{t}'")))?;
            if k == 0 || k > n {
                return Err(domain("IndexOutOfRange", format!("index {k} not in 1..={n}")));
            }
            Ok(k - 1)
        })
        .collect()
}

fn parse_complex(t: &str) -> Option<Complex64> {
    let t = t.trim().replace(' ', "");
    if let Ok(x) = t.parse::<f64>() {
        return Some(Complex64::new(x, 0.0));
    }
    if let Some(im) = t.strip_suffix('i') {
        // forms: "2i", "-i", "1+2i", "1-2i"
        if im.is_empty() || im == "-" || im == "+" {
            let sign = if im == "-" { -1.0 } else { 1.0 };
            return Some(Complex64::new(0.0, sign));
        }
        if let Ok(y) = im.parse::<f64>() {
            return Some(Complex64::new(0.0, y));
        }
        // split at the last +/- that is not an exponent sign or leading
        for (k, c) in im.char_indices().rev() {
            if (c == '+' || c == '-') && k > 0 {
                let prev = im.as_bytes()[k - 1] as char;
                if prev == 'e' || prev == 'E' {
                    continue;
                }
                let re: f64 = im[..k].parse().ok()?;
                let imag_text = &im[k..];
                let y: f64 = if imag_text == "+" {
                    1.0
                } else if imag_text == "-" {
                    -1.0
                } else {
                    imag_text.parse().ok()?
                };
                return Some(Complex64::new(re, y));
            }
        }
    }
    None
}

fn parse_sl2(s: &str) -> Result<Sl2, Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(usage("matrix needs four entries a,b,c,d"));
    }
    let e: Vec<Complex64> = parts
        .iter()
        .map(|t| parse_complex(t).ok_or_else(|| usage(format!("bad entry '{t}'"))))
        .collect::<Result<_, _>>()?;
    Sl2::new(e[0], e[1], e[2], e[3]).map_err(|err| domain("NotUnimodular", err))
}

fn rats(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(rat_to_string(x))).collect())
}

fn rat_rows(rows: &[Vec<Rat>]) -> Value {
    Value::Array(rows.iter().map(|r| rats(r)).collect())
}

fn one_based(word: &[usize]) -> Value {
    Value::Array(word.iter().map(|&i| Value::from(i as u64 + 1)).collect())
}

fn complex_value(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn sl2_value(g: &Sl2) -> Value {
    json!([
        [complex_value(g.a), complex_value(g.b)],
        [complex_value(g.c), complex_value(g.d)]
    ])
}

fn classify_value(m: &GcmMatrix) -> Value {
    let comps = classify(m);
    let comp_value = |c: &crate::gcm::ComponentCertificate| {
        json!({
            "support": c.support.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "kind": c.certificate.kind,
            "rank": c.certificate.rank,
            "witness": c.certificate.witness.as_ref().map(|w| rats(w)),
        })
    };
    if comps.len() == 1 {
        let c = &comps[0];
        json!({
            "kind": c.certificate.kind,
            "rank": c.certificate.rank,
            "witness": c.certificate.witness.as_ref().map(|w| rats(w)),
        })
    } else {
        json!({ "components": comps.iter().map(comp_value).collect::<Vec<_>>() })
    }
}

fn execute(cli: Cli) -> Result<(String, Value), Failure> {
    match cli.cmd {
        Cmd::Classify { gcm } => {
            let m = load_gcm(&gcm)?;
            Ok(("classify".into(), classify_value(&m)))
        }
        Cmd::Symmetrize { gcm } => {
            let m = load_gcm(&gcm)?;
            let s = symmetrize(&m).map_err(gcm_domain)?;
            Ok((
                "symmetrize".into(),
                json!({ "d": rats(&s.d), "b": rat_rows(&s.b.to_rows()) }),
            ))
        }
        Cmd::Realize { gcm } => {
            let m = load_gcm(&gcm)?;
            let rd = build_realization(&m);
            let s = symmetrize(&m).map_err(gcm_domain)?;
            let form = crate::realization::build_bilinear_form(&rd, &s)
                .map_err(|e| domain("DegenerateForm", e))?;
            Ok((
                "realize".into(),
                json!({
                    "dim": rd.dim,
                    "rank": rd.rank,
                    "coroots": rat_rows(&rd.coroots),
                    "roots": rat_rows(&rd.roots),
                    "dependent_rows": rd.dependent_rows.iter().map(|i| i + 1).collect::<Vec<_>>(),
                    "gram": rat_rows(&form.gram.to_rows()),
                }),
            ))
        }
        Cmd::Roots { gcm, max_height, positive_only } => {
            let m = load_gcm(&gcm)?;
            if max_height < 1 {
                return Err(domain("BadWindow", "max-height must be at least 1"));
            }
            let rd = build_realization(&m);
            let wg = WeylGroup::new(&rd);
            let roots = if positive_only {
                wg.positive_real_roots(max_height)
            } else {
                wg.enumerate_real_roots(max_height)
            };
            let list: Vec<Value> = roots
                .iter()
                .map(|r| {
                    json!({
                        "coeffs": r.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "height": r.height,
                        "positive": r.positive,
                    })
                })
                .collect();
            Ok(("roots".into(), json!({ "count": list.len(), "roots": list })))
        }
        Cmd::Weyl { gcm, word } => {
            let m = load_gcm(&gcm)?;
            let rd = build_realization(&m);
            let wg = WeylGroup::new(&rd);
            let w0 = parse_indices(&word, m.n())?;
            let w = wg.from_word(&w0).map_err(|e| domain("BadWord", e))?;
            Ok((
                "weyl".into(),
                json!({
                    "canonical_word": one_based(&w.word),
                    "length": w.length(),
                    "matrix": rat_rows(&w.matrix.to_rows()),
                }),
            ))
        }
        Cmd::TitsCone { gcm, point, max_steps } => {
            let m = load_gcm(&gcm)?;
            let rd = build_realization(&m);
            let wg = WeylGroup::new(&rd);
            let coords = parse_rat_vec(&point)?;
            if coords.len() != rd.dim {
                return Err(domain(
                    "DimensionMismatch",
                    format!("point has {} coordinates, expected {}", coords.len(), rd.dim),
                ));
            }
            let q = crate::cone::tits_cone_membership(
                &wg,
                &RealFormPoint::new(coords),
                max_steps.max(1),
            );
            Ok((
                "tits-cone".into(),
                json!({ "status": q.status, "descent_word": one_based(&q.descent_word) }),
            ))
        }
        Cmd::Singular { gcm, point, max_height } => {
            let m = load_gcm(&gcm)?;
            let rd = build_realization(&m);
            let wg = WeylGroup::new(&rd);
            let coords = parse_rat_vec(&point)?;
            if coords.len() != rd.dim {
                return Err(domain(
                    "DimensionMismatch",
                    format!("point has {} coordinates, expected {}", coords.len(), rd.dim),
                ));
            }
            if max_height < 1 {
                return Err(domain("BadWindow", "max-height must be at least 1"));
            }
            let res = crate::cone::singular_membership(
                &wg,
                &RealFormPoint::new(coords),
                max_height,
            );
            let v = match res {
                crate::cone::SingularResult::Singular(root) => json!({
                    "result": "Singular",
                    "root": root.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                }),
                crate::cone::SingularResult::RegularUpTo(h) => {
                    json!({ "result": "RegularUpTo", "max_height": h })
                }
            };
            Ok(("singular".into(), v))
        }
        Cmd::CheckAxioms { dim, samples, seed } => {
            if dim == 0 || samples < 3 {
                return Err(domain("BadSample", "need dim >= 1 and samples >= 3"));
            }
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let pts = sample_flat_points(dim, samples, &mut rng);
            let report =
                check_loos_axioms(&pts, |x, y| mu_flat(x, y).unwrap(), flat_distance, 1e-10);
            Ok(("check-axioms".into(), serde_json::to_value(report).unwrap()))
        }
        Cmd::Iwasawa { matrix, order } => {
            let g = parse_sl2(&matrix)?;
            let order = match order.to_uppercase().as_str() {
                "UAK" => IwasawaOrder::Uak,
                "KAU" => IwasawaOrder::Kau,
                other => return Err(usage(format!("unknown order '{other}', use UAK or KAU"))),
            };
            let t = iwasawa_decompose(&g, order).map_err(|e| domain("Numeric", e))?;
            Ok((
                "iwasawa".into(),
                json!({
                    "order": if order == IwasawaOrder::Uak { "UAK" } else { "KAU" },
                    "u": sl2_value(&t.u),
                    "a": sl2_value(&t.a),
                    "k": sl2_value(&t.k),
                }),
            ))
        }
        Cmd::SymmetricElement { matrix } => {
            let g = parse_sl2(&matrix)?;
            let v = match is_symmetric_element(&g) {
                SymmetricVerdict::Yes { spectrum } => {
                    json!({ "symmetric": true, "spectrum": [spectrum.0, spectrum.1] })
                }
                SymmetricVerdict::No => json!({ "symmetric": false }),
            };
            Ok(("symmetric-element".into(), v))
        }
        Cmd::DiagramAuts { gcm } => {
            let m = load_gcm(&gcm)?;
            let (g, ws) = diagram_automorphisms(&m).map_err(|e| domain("RankTooLarge", e))?;
            let perm_list = |ps: &[Vec<usize>]| {
                ps.iter()
                    .map(|p| p.iter().map(|i| i + 1).collect::<Vec<_>>())
                    .collect::<Vec<_>>()
            };
            Ok((
                "diagram-auts".into(),
                json!({
                    "autGamma": perm_list(&g),
                    "autWS": perm_list(&ws),
                    "equal": g == ws,
                }),
            ))
        }
        Cmd::RealizeFan { gcm, radius, format } => {
            let m = load_gcm(&gcm)?;
            let cx = HorizonComplex::build(&m, radius).map_err(|e| domain("Horizon", e))?;
            match format.as_str() {
                "dot" => Ok(("realize-fan".into(), Value::String(cx.poset_dot()))),
                "json" => {
                    let cells: Vec<Value> = cx
                        .cells
                        .iter()
                        .map(|c| {
                            json!({
                                "residue": {
                                    "word": one_based(&c.residue.rep.word),
                                    "J": c.residue.j.j.iter().map(|i| i + 1).collect::<Vec<_>>(),
                                    "parabolic_order": c.residue.j.parabolic_order,
                                },
                                "half": if c.half == Half::Positive { "positive" } else { "negative" },
                                "rays": rat_rows(&c.rays),
                                "lineality": rat_rows(&c.lineality),
                                "color": c.color.iter().map(|i| i + 1).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    Ok((
                        "realize-fan".into(),
                        json!({ "radius": radius, "cell_count": cells.len(), "cells": cells }),
                    ))
                }
                other => Err(usage(format!("unknown format '{other}', use json or dot"))),
            }
        }
        Cmd::Parallel { gcm, radius, word1, j1, point1, word2, j2, point2 } => {
            let m = load_gcm(&gcm)?;
            let cx = HorizonComplex::build(&m, radius).map_err(|e| domain("Horizon", e))?;
            let n = m.n();
            let rd = build_realization(&m);
            let wg = WeylGroup::new(&rd);
            let find = |word: &str, j: &str| -> Result<usize, Failure> {
                let w0 = parse_indices(word, n)?;
                let j0 = parse_indices(j, n)?;
                let mut j0 = j0;
                j0.sort();
                let w = wg.from_word(&w0).map_err(|e| domain("BadWord", e))?;
                let rep = wg.min_coset_rep(&w, &j0);
                cx.find(&rep.word, &j0, Half::Positive)
                    .ok_or_else(|| domain("CellNotFound", "no such cell in the ball"))
            };
            let c1 = find(&word1, &j1)?;
            let c2 = find(&word2, &j2)?;
            let p1 = parse_rat_vec(&point1)?;
            let p2 = parse_rat_vec(&point2)?;
            if p1.len() != cx.rd.dim || p2.len() != cx.rd.dim {
                return Err(domain("DimensionMismatch", "point dimension"));
            }
            let parallel = cx
                .parallel_class(c1, &p1, c2, &p2)
                .map_err(|e| domain("PointNotInFace", e))?;
            Ok(("parallel".into(), json!({ "parallel": parallel })))
        }
    }
}

/// Runs the CLI on explicit arguments, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let start = std::time::Instant::now();
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind::*;
            let code = match e.kind() {
                DisplayHelp | DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    let code = match execute(cli) {
        Ok((command, Value::String(raw))) => {
            // raw text output (DOT)
            let _ = command;
            println!("{raw}");
            0
        }
        Ok((command, result)) => {
            let report = json!({
                "command": command,
                "version": env!("CARGO_PKG_VERSION"),
                "result": result,
            });
            println!("{report}");
            0
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Domain(v)) => {
            println!("{}", json!({ "error": v }));
            1
        }
    };
    eprintln!("time_ms={}", start.elapsed().as_millis());
    code
}
