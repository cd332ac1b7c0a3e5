//! Output in the three formats. Every report carries its JSON form, a
//! human table and CSV rows.

use std::io::Write;
use std::path::Path;

use kupka::classify::{Certification, ComponentDescriptor, ConditionChain, TableReport};
use kupka::gkcheck::{exceptional_chart, CertifyConfig, GkCertificate};
use kupka::polyvec::render_field;
use kupka::w0space::W0Basis;
use kupka::weights::{milnor_number, ParamSet};
use serde_json::{json, Value};

use crate::Format;

pub struct Report {
    json: Value,
    text: Vec<String>,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

pub struct Out {
    format: Format,
}

impl Out {
    pub fn new(format: Format) -> Self {
        Out { format }
    }

    /// Write errors (a closed pipe) are ignored.
    pub fn emit(&self, r: &Report) {
        let mut out = std::io::stdout().lock();
        match self.format {
            Format::Json => {
                let s = serde_json::to_string_pretty(&r.json).expect("serializable");
                let _ = writeln!(out, "{s}");
            }
            Format::Table => {
                for l in &r.text {
                    if writeln!(out, "{l}").is_err() {
                        return;
                    }
                }
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                let _ = w.write_record(&r.header);
                for row in &r.rows {
                    let _ = w.write_record(row);
                }
                let _ = w.flush();
            }
        }
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn config_line(cfg: Option<&CertifyConfig>) -> Option<String> {
    cfg.map(|c| {
        format!(
            "# seed={} attempts={} bound={} budget={}",
            c.seed, c.attempts, c.bound, c.budget
        )
    })
}

fn wrap(cfg: Option<&CertifyConfig>, result: Value) -> Value {
    json!({ "config": cfg, "result": result })
}

fn status(c: &ComponentDescriptor) -> (String, String) {
    match &c.certification {
        Certification::NotRequested => ("-".into(), String::new()),
        Certification::Certified { certificate } => ("certified".into(), certificate.source.clone()),
        Certification::Inconclusive { reason } => ("inconclusive".into(), reason.clone()),
    }
}

fn params_string(c: &ComponentDescriptor) -> String {
    c.case_params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

impl Report {
    fn key_values(json: Value, pairs: Vec<(String, String)>) -> Report {
        // Combining marks (the bar in p̄) take no column.
        let cols = |k: &str| k.chars().filter(|c| !('\u{300}'..='\u{36f}').contains(c)).count();
        let width = pairs.iter().map(|(k, _)| cols(k)).max().unwrap_or(0);
        Report {
            json,
            text: pairs
                .iter()
                .map(|(k, v)| format!("{k}{}  {v}", " ".repeat(width - cols(k))))
                .collect(),
            header: vec!["key".into(), "value".into()],
            rows: pairs.into_iter().map(|(k, v)| vec![k, v]).collect(),
        }
    }

    pub fn params(ps: &ParamSet) -> Report {
        let zero: Vec<usize> = (2..=ps.n()).filter(|&j| ps.chart_tau(j) == 0).collect();
        let taus: Vec<String> = ps
            .tau_i
            .iter()
            .enumerate()
            .map(|(k, t)| {
                if k >= 1 && *t == 0 {
                    "[0]".to_string()
                } else {
                    t.to_string()
                }
            })
            .collect();
        let m1 = milnor_number(ps.weights.as_slice(), ps.lambda);
        let exc = exceptional_chart(ps);
        let mut pairs = vec![
            ("weights".into(), join(ps.weights.as_slice())),
            ("λ".into(), ps.lambda.to_string()),
            ("d".into(), ps.d.to_string()),
            ("τ".into(), ps.tau.to_string()),
            ("λ_i".into(), join(&ps.lambda_i)),
            ("τ_i".into(), taus.join(" ")),
            ("p̄".into(), join(&ps.p_bar)),
            ("m_1".into(), m1.to_string()),
            (
                "exceptional chart".into(),
                exc.map_or("none".into(), |i| i.to_string()),
            ),
        ];
        for j in &zero {
            pairs.push((format!("τ_{j} = 0"), "<-- zero trace".into()));
        }
        let json = json!({
            "params": ps,
            "milnor": m1.to_string(),
            "zero_taus": zero,
            "exceptional_chart": exc,
        });
        Report::key_values(json, pairs)
    }

    pub fn w0(ps: &ParamSet, b: &W0Basis) -> Report {
        let fields: Vec<String> = (0..b.dim()).map(|k| render_field(&b.element(k))).collect();
        let mut text = vec![format!("# {ps}"), format!("dim W_0 = {}", b.dim())];
        text.extend(fields.iter().enumerate().map(|(k, f)| format!("Y{}: {f}", k + 1)));
        Report {
            json: json!({ "params": ps, "dim": b.dim(), "basis": fields }),
            text,
            header: vec!["index".into(), "field".into()],
            rows: fields
                .iter()
                .enumerate()
                .map(|(k, f)| vec![(k + 1).to_string(), f.clone()])
                .collect(),
        }
    }

    pub fn dim(ps: &ParamSet, k: Option<i64>) -> Report {
        let v = k.map_or("empty family".to_string(), |k| k.to_string());
        Report {
            json: json!({ "params": ps, "dimension": k }),
            text: vec![v.clone()],
            header: vec!["dimension".into()],
            rows: vec![vec![v]],
        }
    }

    pub fn check(
        ps: &ParamSet,
        cfg: &CertifyConfig,
        chains: Vec<(String, String)>,
        cert: Option<GkCertificate>,
        failures: Vec<String>,
    ) -> Report {
        let mut text = vec![config_line(Some(cfg)).unwrap(), format!("# {ps}")];
        for (rep, c) in &chains {
            text.push(format!("chain {rep}: {c}"));
        }
        if let Some(c) = &cert {
            text.push(format!(
                "certified: weights {} λ={} via {}",
                c.weights, c.lambda, c.source
            ));
            text.push(format!("witness: {}", render_field(&c.witness)));
            text.push(format!("quotient dimension at origin: {}", c.quotient_dim));
            for s in &c.chart_status {
                text.push(format!("chart {}: {:?}", s.chart, s.classification));
            }
        }
        for f in &failures {
            text.push(format!("diagnosis: {f}"));
        }
        let verdict = if cert.is_some() && !chains.is_empty() {
            "GK component"
        } else {
            "not certified"
        };
        text.push(format!("verdict: {verdict}"));
        let rows = vec![vec![
            ps.weights.to_string(),
            ps.lambda.to_string(),
            ps.d.to_string(),
            verdict.to_string(),
            cert.as_ref().map_or(String::new(), |c| c.source.clone()),
        ]];
        Report {
            json: wrap(
                Some(cfg),
                json!({
                    "params": ps,
                    "chains": chains.iter().map(|(r, c)| json!({"representative": r, "chain": c})).collect::<Vec<_>>(),
                    "certificate": cert,
                    "diagnosis": failures,
                }),
            ),
            text,
            header: ["weights", "lambda", "d", "verdict", "source"]
                .map(String::from)
                .to_vec(),
            rows,
        }
    }

    pub fn components(cfg: Option<&CertifyConfig>, v: Vec<ComponentDescriptor>) -> Report {
        let mut text: Vec<String> = config_line(cfg).into_iter().collect();
        text.push(format!(
            "{:<22} {:<11} {:<14} {:>5}  {}",
            "weights; λ", "case", "params", "dim", "status"
        ));
        let mut rows = Vec::new();
        for c in &v {
            let (st, detail) = status(c);
            let wl = format!("{}; {}", join(c.weights.as_slice()), c.lambda);
            let st_full = if detail.is_empty() {
                st.clone()
            } else {
                format!("{st} ({detail})")
            };
            text.push(format!(
                "{:<22} {:<11} {:<14} {:>5}  {}",
                wl,
                c.case_tag.to_string(),
                params_string(c),
                c.dimension,
                st_full
            ));
            rows.push(vec![
                c.n.to_string(),
                c.d.to_string(),
                join(c.weights.as_slice()),
                c.lambda.to_string(),
                c.case_tag.to_string(),
                params_string(c),
                c.dimension.to_string(),
                st,
                detail,
            ]);
        }
        text.push(format!("{} component(s)", v.len()));
        Report {
            json: wrap(cfg, serde_json::to_value(&v).expect("serializable")),
            text,
            header: [
                "n", "d", "weights", "lambda", "case", "params", "dimension", "status", "detail",
            ]
            .map(String::from)
            .to_vec(),
            rows,
        }
    }

    pub fn chains(n: usize, chains: &[ConditionChain]) -> Report {
        let lines: Vec<String> = chains.iter().map(|c| c.to_string()).collect();
        let mut text = vec![format!("# n = {n}: {} chain(s)", chains.len())];
        text.extend(lines.iter().cloned());
        Report {
            json: serde_json::to_value(chains).expect("serializable"),
            text,
            header: vec!["chain".into()],
            rows: lines.into_iter().map(|l| vec![l]).collect(),
        }
    }

    pub fn table(cfg: Option<&CertifyConfig>, r: TableReport) -> Report {
        let mut text: Vec<String> = config_line(cfg).into_iter().collect();
        text.push(format!("# table {} (n = {}, d = {})", r.table, r.n, r.d));
        text.push(format!("{}/{} matched", r.matched, r.expected.len()));
        for m in &r.missing {
            text.push(format!("missing: {m}"));
        }
        for m in &r.extra {
            text.push(format!("extra: {m}"));
        }
        for m in &r.uncertified {
            text.push(format!("uncertified: {m}"));
        }
        text.push(if r.passed() { "pass" } else { "FAIL" }.to_string());
        let mut rows = Vec::new();
        for e in &r.expected {
            let st = if r.missing.contains(e) { "missing" } else { "matched" };
            rows.push(vec![e.clone(), st.to_string()]);
        }
        for e in &r.extra {
            rows.push(vec![e.clone(), "extra".to_string()]);
        }
        Report {
            json: wrap(cfg, serde_json::to_value(&r).expect("serializable")),
            text,
            header: vec!["component".into(), "status".into()],
            rows,
        }
    }

    pub fn replay(path: &Path, err: Option<String>) -> Report {
        let verdict = match &err {
            None => "replay ok".to_string(),
            Some(e) => format!("replay failed: {e}"),
        };
        Report::key_values(
            json!({ "file": path.display().to_string(), "ok": err.is_none(), "error": err }),
            vec![(path.display().to_string(), verdict)],
        )
    }
}
