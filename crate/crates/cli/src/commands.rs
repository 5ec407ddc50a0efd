use std::fmt::Write;
use std::sync::Arc;

use serde_json::{json, Value};
use vxa_core::bialgebra::{coproduct, primitives_up_to, render_tensor};
use vxa_core::dsl::{print_presentation, Lowered};
use vxa_core::enveloping::{render, Enveloping};
use vxa_core::exec::Exec;
use vxa_core::fvl::{check_fvl_jacobi, check_identities, extract_fvl, fvl_to_json};
use vxa_core::lca::{check_lca_axioms, Frame, Residual};
use vxa_core::manifold::{check_manifold_axioms, conf_of, integrate};
use vxa_core::scalar::to_f64;
use vxa_core::{render as r, Error, Result};

use crate::input;
use crate::{Cli, Command, Format};

pub struct Output {
    pub text: String,
    pub pass: bool,
}

const JACOBI_SAMPLES: [(i64, i64, i64); 4] = [(0, 0, 0), (-1, 0, 0), (0, -1, 1), (1, -1, -1)];

fn emit(cli: &Cli, text: String, doc: Value, pass: bool) -> Output {
    let text = match cli.format {
        Format::Text => text,
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()),
    };
    Output { text, pass }
}

fn warn(l: &Lowered) {
    for w in &l.warnings {
        eprintln!("warning: {w}");
    }
}

fn load(file: &str) -> Result<Lowered> {
    let l = input::load(file)?;
    warn(&l);
    Ok(l)
}

pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Check { file } => {
            let p = load(file)?.presentation;
            let report = check_lca_axioms(&p);
            let mut lines = Vec::new();
            let mut checks = Vec::new();
            for c in &report.checks {
                let witness = c.witness.as_ref().map(|(gens, res)| {
                    let names: Vec<&str> = gens.iter().map(|g| p.generators()[*g as usize].name.as_str()).collect();
                    let residual = match res {
                        Residual::Lambda(x) => r::lambda_poly(&p, x),
                        Residual::LambdaMu(x) => r::lambda_mu_poly(&p, x),
                    };
                    (names, residual)
                });
                lines.push(format!("{}: {}", c.axiom, if c.passed() { "pass" } else { "FAIL" }));
                checks.push(json!({
                    "axiom": c.axiom,
                    "pass": c.passed(),
                    "witness": witness.as_ref().map(|(g, res)| json!({ "generators": g, "residual": res })),
                }));
                if let Some((g, res)) = witness {
                    lines.push(format!("  at ({}): residual {res}", g.join(", ")));
                }
            }
            let text = if report.passed() { lines.join(", ") } else { lines.join("\n") } + "\n";
            let doc = json!({ "algebra": p.name(), "pass": report.passed(), "checks": checks });
            Ok(emit(cli, text, doc, report.passed()))
        }
        Command::Bracket { file, left, right } => {
            let p = load(file)?.presentation;
            let (u, v) = (input::vector(left, &p)?, input::vector(right, &p)?);
            let b = p.lambda_bracket(&u, &v);
            let coeffs: Vec<Value> = b
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(n, c)| json!({ "lambda_power": n, "vector": r::vector(&p, c) }))
                .collect();
            let text = format!("{}\n", r::lambda_poly(&p, &b));
            let doc = json!({ "left": r::vector(&p, &u), "right": r::vector(&p, &v), "bracket": r::lambda_poly(&p, &b), "coefficients": coeffs });
            Ok(emit(cli, text, doc, true))
        }
        Command::Nth { file, left, right, n } => {
            let p = load(file)?.presentation;
            let (u, v) = (input::vector(left, &p)?, input::vector(right, &p)?);
            let x = p.nth_product(&u, &v, *n)?;
            let doc = json!({ "n": n, "product": r::vector(&p, &x) });
            Ok(emit(cli, format!("{}\n", r::vector(&p, &x)), doc, true))
        }
        Command::Nop { file, left, right } => {
            let env = Enveloping::raw(&load(file)?.presentation);
            let (u, v) = (input::pbw(left, &env)?, input::pbw(right, &env)?);
            let x = env.nop(&u, &v);
            let doc = json!({ "product": render(&env, &x) });
            Ok(emit(cli, format!("{}\n", render(&env, &x)), doc, true))
        }
        Command::Yprod { file, left, right, window } => {
            let env = Enveloping::raw(&load(file)?.presentation);
            let (u, v) = (input::pbw(left, &env)?, input::pbw(right, &env)?);
            let (rows, bound) = env.y_window(&u, &v, window.0, window.1);
            let mut text = String::new();
            let mut products = Vec::new();
            for (n, x) in &rows {
                writeln!(text, "({n}): {}", render(&env, x)).unwrap();
                products.push(json!({ "n": n, "value": render(&env, x) }));
            }
            writeln!(text, "zero for n >= {bound}").unwrap();
            let doc = json!({ "window": [window.0, window.1], "bound": bound, "products": products });
            Ok(emit(cli, text, doc, true))
        }
        Command::Coproduct { file, elem } => {
            let env = Enveloping::raw(&load(file)?.presentation);
            let u = input::pbw(elem, &env)?;
            let d = render_tensor(&env, &coproduct(&env, &u));
            let doc = json!({ "element": render(&env, &u), "coproduct": d });
            Ok(emit(cli, format!("{d}\n"), doc, true))
        }
        Command::Primitives { file, max_len, depth } => {
            let env = Enveloping::raw(&load(file)?.presentation);
            let prims: Vec<String> = primitives_up_to(&env, *max_len, *depth).iter().map(|u| render(&env, u)).collect();
            let mut text = format!("{} primitive elements (length <= {max_len}, depth <= {depth})\n", prims.len());
            for s in &prims {
                writeln!(text, "  {s}").unwrap();
            }
            let doc = json!({ "max_len": max_len, "depth": depth, "primitives": prims });
            Ok(emit(cli, text, doc, true))
        }
        Command::Fvl { file, deg, depth, window, check_identities: ids, check_jacobi, out } => {
            let p = load(file)?.presentation;
            let env = Enveloping::new(Arc::new(Frame::auto(Arc::new(p))));
            let t = extract_fvl(&env, *deg, *depth, *window, Exec::default());
            let table = fvl_to_json(&t);
            let mut pass = true;
            let mut checks = serde_json::Map::new();
            let mut text = format!(
                "{}: degree {}, depth {}, window [{}, {}], {} nonzero coefficients\n",
                t.algebra,
                t.degree,
                t.depth,
                t.window.0,
                t.window.1,
                t.num_entries()
            );
            if let Some(path) = out {
                let body = serde_json::to_string_pretty(&table).unwrap() + "\n";
                std::fs::write(path, body).map_err(|e| Error::InvalidInput(format!("cannot write {path}: {e}")))?;
            }
            if *ids {
                let rep = check_identities(&t);
                pass &= rep.passed();
                for (name, w) in [("left identity", &rep.left), ("right identity", &rep.right)] {
                    writeln!(text, "{name}: {}", w.as_ref().map_or("pass".to_string(), |w| format!("FAIL at {w}"))).unwrap();
                }
                checks.insert("identities".into(), json!({ "pass": rep.passed(), "left": rep.left, "right": rep.right }));
            }
            if let Some(d) = check_jacobi {
                let rep = check_fvl_jacobi(&t, &JACOBI_SAMPLES, *d, Exec::default())?;
                pass &= rep.passed();
                writeln!(
                    text,
                    "jacobi (degree {d}, outputs up to depth {}, {} cases): {}",
                    rep.target_depth,
                    rep.checked,
                    if rep.passed() { "pass" } else { "FAIL" }
                )
                .unwrap();
                for f in rep.failures.iter().take(5) {
                    writeln!(text, "  {:?} at {}: {}", f.sample, f.output, f.residual).unwrap();
                }
                let fails: Vec<Value> = rep
                    .failures
                    .iter()
                    .map(|f| json!({ "sample": [f.sample.0, f.sample.1, f.sample.2], "output": f.output, "residual": f.residual }))
                    .collect();
                checks.insert(
                    "jacobi".into(),
                    json!({ "pass": rep.passed(), "degree": d, "target_depth": rep.target_depth, "checked": rep.checked, "failures": fails }),
                );
            }
            let doc = match out {
                Some(path) => {
                    writeln!(text, "table written to {path}").unwrap();
                    json!({ "out": path, "entries": t.num_entries(), "checks": checks })
                }
                None => {
                    for e in table["entries"].as_array().unwrap() {
                        writeln!(text, "  {} n={} k={} k'={}: {}", e["l"].as_str().unwrap(), e["n"], e["k"], e["kprime"], e["coeff"].as_str().unwrap())
                            .unwrap();
                    }
                    let mut doc = table;
                    if !checks.is_empty() {
                        doc["checks"] = Value::Object(checks);
                    }
                    doc
                }
            };
            Ok(emit(cli, text, doc, pass))
        }
        Command::Integrate { file, depth } => {
            let p = load(file)?.presentation;
            let m = integrate(&p)?;
            let mut text = format!("{}: nilpotent, N = {}, {} frame\n", p.name(), m.degree(), m.frame().kind_name());
            let mut theta = Vec::new();
            let mut change = serde_json::Map::new();
            for (l, th, v) in m.letter_table(*depth) {
                let name = m.frame().letter_name(l);
                writeln!(text, "  {name}  theta={th}  = {}", r::vector(&p, &v)).unwrap();
                theta.push(json!({ "letter": name, "theta": th }));
                change.insert(name, Value::String(r::vector(&p, &v)));
            }
            let doc = json!({ "algebra": p.name(), "N": m.degree(), "frame": m.frame().kind_name(), "theta_table": theta, "basis_change": change });
            Ok(emit(cli, text, doc, true))
        }
        Command::Eval { file, a, b, window, float } => {
            let p = load(file)?.presentation;
            let m = integrate(&p)?;
            let (va, vb) = (input::point(a, &p)?, input::point(b, &p)?);
            let (pa, pb) = (m.point_of(&va), m.point_of(&vb));
            let bound = m.truncation_bound(&pa, &pb);
            let rows = m.product_window(&pa, &pb, *window, Exec::default());
            let mut text = String::new();
            let mut products = Vec::new();
            for (n, x) in &rows {
                let v = m.vector_of(x);
                writeln!(text, "n = {n}: {}", r::coords(&p, &v)).unwrap();
                let mut entry = json!({ "n": n, "coords": input::coords_json(&p, &v)["coords"] });
                if *float {
                    let approx: serde_json::Map<String, Value> = v
                        .iter()
                        .map(|(idx, c)| (format!("{}[{}]", p.generators()[idx.gen as usize].name, idx.depth), json!(to_f64(c))))
                        .collect();
                    let shown: Vec<String> = approx.iter().map(|(k, x)| format!("{k}~{x}")).collect();
                    if !shown.is_empty() {
                        writeln!(text, "        approx {}", shown.join(", ")).unwrap();
                    }
                    entry["float"] = Value::Object(approx);
                }
                products.push(entry);
            }
            writeln!(text, "zero for n >= {bound}").unwrap();
            let doc = json!({
                "algebra": p.name(),
                "a": input::coords_json(&p, &va),
                "b": input::coords_json(&p, &vb),
                "window": [window.0, window.1],
                "bound": bound,
                "products": products,
            });
            Ok(emit(cli, text, doc, true))
        }
        Command::VerifyManifold { file, samples, window } => {
            let p = load(file)?.presentation;
            let m = integrate(&p)?;
            let rep = check_manifold_axioms(&m, *samples, cli.seed, *window, 3, (-1, 1), Exec::default());
            let mut text = format!("{}: {} points, seed {}, window [{}, {}]\n", p.name(), samples, cli.seed, window.0, window.1);
            for c in &rep.checks {
                writeln!(text, "{}: {} ({} cases)", c.axiom, if c.pass { "pass" } else { "FAIL" }, c.checked).unwrap();
                if let Some(w) = &c.witness {
                    writeln!(text, "  {w}").unwrap();
                }
            }
            let doc = serde_json::to_value(&rep).unwrap();
            Ok(emit(cli, text, doc, rep.passed()))
        }
        Command::Roundtrip { file } => {
            let p = load(file)?.presentation;
            let back = conf_of(&integrate(&p)?)?;
            let same = back == p;
            let recovered = print_presentation(&back);
            let text = format!("{recovered}round trip: {}\n", if same { "exact match" } else { "MISMATCH" });
            let doc = json!({ "algebra": p.name(), "match": same, "recovered": recovered });
            Ok(emit(cli, text, doc, same))
        }
        Command::Fmt { file } => {
            let src = std::fs::read_to_string(file).map_err(|e| Error::InvalidInput(format!("cannot read {file}: {e}")))?;
            let f = vxa_core::dsl::parse_algebra(&src).map_err(|d| Error::InvalidInput(format!("{file}:{d}")))?;
            let text = vxa_core::dsl::print_algebra(&f);
            let doc = json!({ "source": text });
            Ok(emit(cli, text, doc, true))
        }
    }
}
