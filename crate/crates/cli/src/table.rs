use serde_json::Value;

use crate::report::Report;

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn columns(rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let w: Vec<usize> =
        (0..width).map(|i| rows.iter().filter_map(|r| r.get(i)).map(|c| c.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r.iter().enumerate().map(|(i, c)| format!("{c:<w$}", w = w[i])).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn tree(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if x.is_object() || (x.is_array() && x.as_array().is_some_and(|a| a.iter().any(|e| e.is_object()))) {
                    out.push_str(&format!("{pad}{k}:\n"));
                    tree(x, indent + 2, out);
                } else {
                    out.push_str(&format!("{pad}{k}: {}\n", scalar(x)));
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                out.push_str(&format!("{pad}-\n"));
                tree(x, indent + 2, out);
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

fn homology_table(p: &Value) -> String {
    let mut rows = vec![vec!["degree".to_string(), "group".into(), "betti".into(), "torsion".into()]];
    for d in p["homology"].as_array().into_iter().flatten() {
        rows.push(vec![scalar(&d["degree"]), scalar(&d["group"]), scalar(&d["betti"]), scalar(&d["torsion"])]);
    }
    let mut out = format!("theory {}{}\n", scalar(&p["theory"]), if p["reduced"] == true { " (reduced)" } else { "" });
    out.push_str(&columns(&rows));
    out.push_str(&format!("dd = 0: {}\n", scalar(&p["boundary_check"]["passed"])));
    if !p["inconclusive_beyond"].is_null() {
        out.push_str(&format!("inconclusive beyond degree {}\n", scalar(&p["inconclusive_beyond"])));
    }
    out
}

fn compare_table(p: &Value) -> String {
    let mut rows = vec![vec![
        "theory".to_string(),
        "degree".into(),
        "H".into(),
        "HR".into(),
        "HF".into(),
        "agree".into(),
        "ker CF->CR".into(),
    ]];
    for t in p["theories"].as_array().into_iter().flatten() {
        for d in t["degrees"].as_array().into_iter().flatten() {
            let n = d["degree"].as_u64().unwrap_or(0) as usize;
            let agree = d["H_eq_HR"] == true && d["HR_eq_HF"] == true;
            rows.push(vec![
                scalar(&t["theory"]),
                scalar(&d["degree"]),
                scalar(&d["H"]),
                scalar(&d["HR"]),
                scalar(&d["HF"]),
                if agree { "yes".into() } else { "NO".into() },
                scalar(&t["cf_to_cr"]["kernel_rank"][n]),
            ]);
        }
    }
    format!("{} ({})\n{}", scalar(&p["label"]), scalar(&p["note"]), columns(&rows))
}

pub fn render(r: &Report) -> String {
    let mut out = format!("hda {} {}: {}\n", r.command, r.version, scalar(&serde_json::to_value(r.status).unwrap()));
    if let Some(d) = &r.input_digest {
        out.push_str(&format!("input {d}\n"));
    }
    for e in &r.errors {
        out.push_str(&format!("error: {e}\n"));
    }
    match r.command.as_str() {
        "homology" if !r.payload.is_null() && r.payload.get("homology").is_some() => out.push_str(&homology_table(&r.payload)),
        "compare" if r.payload.get("theories").is_some() => out.push_str(&compare_table(&r.payload)),
        _ => tree(&r.payload, 0, &mut out),
    }
    if let Some(t) = r.timing_ms {
        out.push_str(&format!("time {t} ms\n"));
    }
    out
}
