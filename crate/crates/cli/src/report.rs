use serde::Serialize;
use serde_json::{Map, Value};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Verified,
    Refuted,
    Contradiction,
    Open,
    Error,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Verified | Verdict::Open => 0,
            Verdict::Refuted | Verdict::Contradiction => 2,
            Verdict::Error => 1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Verified => "VERIFIED",
            Verdict::Refuted => "REFUTED",
            Verdict::Contradiction => "CONTRADICTION",
            Verdict::Open => "OPEN",
            Verdict::Error => "ERROR",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: &'static str,
    pub subcommand: String,
    pub verdict: Verdict,
    pub payload: Value,
}

impl Report {
    pub fn new(subcommand: &str, verdict: Verdict, payload: Value) -> Report {
        Report { schema_version: SCHEMA_VERSION, subcommand: subcommand.to_string(), verdict, payload }
    }

    pub fn error(subcommand: &str, message: &str) -> Report {
        let mut m = Map::new();
        m.insert("error".into(), Value::String(message.to_string()));
        Report::new(subcommand, Verdict::Error, Value::Object(m))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// One `key: value` line per scalar leaf, keys in insertion order.
    pub fn to_text(&self) -> String {
        let mut out = format!("nullquad {}\nverdict: {}\n", self.subcommand, self.verdict.as_str());
        flatten("", &self.payload, &mut out);
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        Value::Array(xs) if xs.iter().all(|x| scalar(x).is_some()) => {
            let items: Vec<String> = xs.iter().filter_map(scalar).collect();
            out.push_str(&format!("{prefix}: [{}]\n", items.join(", ")));
        }
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        _ => out.push_str(&format!("{prefix}: {}\n", scalar(v).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn text_rendering_is_flat() {
        let r = Report::new("enumerate", Verdict::Open, json!({"d": 9, "open": [[1, 1]], "x": {"y": true}}));
        assert_eq!(r.to_text(), "nullquad enumerate\nverdict: OPEN\nd: 9\nopen[0]: [1, 1]\nx.y: true\n");
        assert_eq!(Verdict::Contradiction.exit_code(), 2);
        assert!(r.to_json().contains("\"schema_version\": \"1\""));
    }
}
