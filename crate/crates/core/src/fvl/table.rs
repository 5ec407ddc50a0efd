use std::collections::BTreeMap;

use num::Zero;
use serde_json::{json, Value};

use crate::enveloping::{multi_factorial, Enveloping, Monomial, UElement};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::lca::Letter;
use crate::scalar::{fmt_q, parse_q, Q};

/// Coefficients `c^{l,n}_{k,k'}` of a formal vertex law, truncated to total
/// degree `degree`, positions of stratum at most `depth`, and `n` in `window`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FvlTable {
    pub algebra: String,
    pub degree: u32,
    pub depth: u32,
    pub window: (i64, i64),
    pub kappa: u32,
    /// Positions with their strata and names.
    pub positions: BTreeMap<Letter, (u32, String)>,
    pub entries: BTreeMap<(Letter, i64), BTreeMap<(Monomial, Monomial), Q>>,
}

impl FvlTable {
    pub fn coeff(&self, l: Letter, n: i64, k: &Monomial, kp: &Monomial) -> Q {
        self.entries
            .get(&(l, n))
            .and_then(|m| m.get(&(k.clone(), kp.clone())))
            .cloned()
            .unwrap_or_else(Q::zero)
    }

    pub fn stratum(&self, l: Letter) -> u32 {
        self.positions[&l].0
    }

    pub fn weight(&self, m: &[Letter]) -> i64 {
        m.iter().map(|l| (self.stratum(*l) + self.kappa) as i64).sum()
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.positions[&l].1
    }

    pub fn num_entries(&self) -> usize {
        self.entries.values().map(|m| m.len()).sum()
    }

    pub fn in_window(&self, n: i64) -> bool {
        self.window.0 <= n && n <= self.window.1
    }
}

/// Monomials of length at most `max_len` over `letters`, shortest first.
pub fn monomials(letters: &[Letter], max_len: usize) -> Vec<Monomial> {
    let mut out = vec![Monomial::new()];
    let mut layer = vec![Monomial::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for m in &layer {
            for l in letters {
                if m.last().is_none_or(|x| x <= l) {
                    let mut w = m.clone();
                    w.push(*l);
                    next.push(w);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Tabulates `π(e_k (n) e_k') / (k! k'!)` for `|k| + |k'| <= degree`.
pub fn extract_fvl(env: &Enveloping, degree: u32, depth: u32, window: (i64, i64), exec: Exec) -> FvlTable {
    let letters = env.letters_up_to(depth);
    let frame = env.frame();
    let positions: BTreeMap<Letter, (u32, String)> =
        letters.iter().map(|l| (*l, (frame.stratum(*l), frame.letter_name(*l)))).collect();
    let monos = monomials(&letters, degree as usize);
    let mut pairs = Vec::new();
    for k in &monos {
        for kp in &monos {
            if k.len() + kp.len() <= degree as usize {
                pairs.push((k.clone(), kp.clone()));
            }
        }
    }
    let cells = exec.map(&pairs, |(k, kp)| {
        let u = UElement::monomial(k.clone(), num::One::one());
        let v = UElement::monomial(kp.clone(), num::One::one());
        let norm = multi_factorial(k) * multi_factorial(kp);
        let mut out = Vec::new();
        for n in window.0..=window.1 {
            for (l, c) in env.nth_product(&u, &v, n).linear_part() {
                if positions.contains_key(&l) {
                    out.push((l, n, c / &norm));
                }
            }
        }
        out
    });
    let mut entries: BTreeMap<(Letter, i64), BTreeMap<(Monomial, Monomial), Q>> = BTreeMap::new();
    for ((k, kp), cell) in pairs.into_iter().zip(cells) {
        for (l, n, c) in cell {
            entries.entry((l, n)).or_default().insert((k.clone(), kp.clone()), c);
        }
    }
    FvlTable {
        algebra: env.presentation().name().to_string(),
        degree,
        depth,
        window,
        kappa: env.kappa(),
        positions,
        entries,
    }
}

fn multi_index_json(t: &FvlTable, m: &Monomial) -> Value {
    let mut map = serde_json::Map::new();
    for l in m {
        let e = map.entry(t.name(*l).to_string()).or_insert(json!(0));
        *e = json!(e.as_u64().unwrap() + 1);
    }
    Value::Object(map)
}

pub fn fvl_to_json(t: &FvlTable) -> Value {
    let mut entries = Vec::new();
    for ((l, n), cell) in &t.entries {
        for ((k, kp), c) in cell {
            entries.push(json!({
                "l": t.name(*l),
                "n": n,
                "k": multi_index_json(t, k),
                "kprime": multi_index_json(t, kp),
                "coeff": fmt_q(c),
            }));
        }
    }
    json!({
        "algebra": t.algebra,
        "degree": t.degree,
        "depth": t.depth,
        "window": [t.window.0, t.window.1],
        "entries": entries,
    })
}

fn bad(msg: &str) -> Error {
    Error::InvalidInput(format!("fvl table json: {msg}"))
}

/// Reads a table written by [`fvl_to_json`]; letter names are resolved in
/// the frame of `env`.
pub fn fvl_from_json(v: &Value, env: &Enveloping) -> Result<FvlTable> {
    let frame = env.frame();
    let degree = v["degree"].as_u64().ok_or_else(|| bad("degree"))? as u32;
    let depth = v["depth"].as_u64().ok_or_else(|| bad("depth"))? as u32;
    let w = v["window"].as_array().ok_or_else(|| bad("window"))?;
    let window = (
        w.first().and_then(Value::as_i64).ok_or_else(|| bad("window"))?,
        w.get(1).and_then(Value::as_i64).ok_or_else(|| bad("window"))?,
    );
    let letter = |s: &str| frame.parse_letter(s).ok_or_else(|| bad(&format!("unknown letter {s}")));
    let multi = |x: &Value| -> Result<Monomial> {
        let mut out = Vec::new();
        for (name, e) in x.as_object().ok_or_else(|| bad("multi-index"))? {
            let l = letter(name)?;
            for _ in 0..e.as_u64().ok_or_else(|| bad("exponent"))? {
                out.push(l);
            }
        }
        Ok(crate::enveloping::monomial(&out))
    };
    let mut entries: BTreeMap<(Letter, i64), BTreeMap<(Monomial, Monomial), Q>> = BTreeMap::new();
    for e in v["entries"].as_array().ok_or_else(|| bad("entries"))? {
        let l = letter(e["l"].as_str().ok_or_else(|| bad("l"))?)?;
        let n = e["n"].as_i64().ok_or_else(|| bad("n"))?;
        let c = parse_q(e["coeff"].as_str().ok_or_else(|| bad("coeff"))?).ok_or_else(|| bad("coeff"))?;
        entries.entry((l, n)).or_default().insert((multi(&e["k"])?, multi(&e["kprime"])?), c);
    }
    let positions = env
        .letters_up_to(depth)
        .into_iter()
        .map(|l| (l, (frame.stratum(l), frame.letter_name(l))))
        .collect();
    Ok(FvlTable {
        algebra: v["algebra"].as_str().unwrap_or_default().to_string(),
        degree,
        depth,
        window,
        kappa: env.kappa(),
        positions,
        entries,
    })
}
