//! JSON and CSV renderings of an orbifold algebra.

use serde_json::{json, Value};

use super::{FrobeniusReport, OrbifoldAlgebra};

/// `{ "sectors": [...], "table": [...], "frobenius": {...} }`. The table lists
/// the generator products `1_g ∪ 1_h` that are nonzero.
pub fn export_json(alg: &OrbifoldAlgebra, report: Option<&FrobeniusReport>) -> Value {
    let sectors: Vec<Value> = alg
        .sectors()
        .iter()
        .map(|s| {
            json!({
                "g": s.g.text(),
                "moving": s.locus.moving.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "w_g": s.locus.w_g.pretty(),
                "dim": s.dim(),
                "parity": if s.parity == 1 { "odd" } else { "even" },
                "basis": s.ring.basis().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut table = Vec::new();
    for g in alg.sectors() {
        for h in alg.sectors() {
            if let Ok(Some(c)) = alg.cup_generators(&g.g, &h.g) {
                let s = alg.sector_index(&g.g.mul(&h.g)).expect("closed");
                let class = alg.sectors()[s].ring.normal_form(&c);
                let reduced = alg.sectors()[s].ring.lift(&class);
                if reduced.is_zero() {
                    continue;
                }
                table.push(json!({
                    "g": g.g.text(),
                    "h": h.g.text(),
                    "result": {
                        "sector": g.g.mul(&h.g).text(),
                        "coefficient": reduced.pretty(),
                        "terms": reduced,
                    },
                }));
            }
        }
    }
    let frobenius = report.map(|r| {
        let mut m = serde_json::Map::new();
        for a in &r.results {
            let v = match &a.witness {
                None => json!("pass"),
                Some(w) => json!({ "witness": w }),
            };
            m.insert(format!("{}. {}", a.group, a.name), v);
        }
        Value::Object(m)
    });
    json!({
        "sectors": sectors,
        "table": table,
        "frobenius": frobenius,
    })
}

/// One line per sector: `g,moving,dim,parity`.
pub fn export_csv(alg: &OrbifoldAlgebra) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["g", "moving", "dim", "parity"]).expect("in-memory write");
    for s in alg.sectors() {
        let moving: Vec<String> = s.locus.moving.iter().map(|i| format!("x{}", i + 1)).collect();
        let parity = if s.parity == 1 { "odd" } else { "even" };
        w.write_record([s.g.text(), moving.join(" "), s.dim().to_string(), parity.to_string()]).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 fields")
}
