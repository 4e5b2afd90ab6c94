use serde_json::{Map, Value};

/// Output of one verb. Text mode prints `lines`; JSON mode prints the five
/// stable keys.
#[derive(Debug)]
pub struct Report {
    pub verb: &'static str,
    pub inputs: Map<String, Value>,
    pub result: Value,
    pub certificates: Value,
    pub undecided: Vec<Value>,
    pub lines: Vec<String>,
    /// 0, or 1 when a check the verb performs has failed.
    pub exit: i32,
}

impl Report {
    pub fn new(verb: &'static str) -> Report {
        Report {
            verb,
            inputs: Map::new(),
            result: Value::Null,
            certificates: Value::Null,
            undecided: Vec::new(),
            lines: Vec::new(),
            exit: 0,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("verb".into(), Value::String(self.verb.into()));
        m.insert("inputs".into(), Value::Object(self.inputs.clone()));
        m.insert("result".into(), self.result.clone());
        m.insert("certificates".into(), self.certificates.clone());
        m.insert("undecided".into(), Value::Array(self.undecided.clone()));
        Value::Object(m)
    }

    /// Pretty JSON; `serde_json` maps keep keys sorted, so the bytes are
    /// canonical.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("json values serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn keys_are_sorted_and_round_trip() {
        let mut r = Report::new("length");
        r.input("word", "2 1 2");
        r.input("system", "a2.cox");
        r.result = json!({"length": 3, "canonical": "1 2 1"});
        let text = r.to_json();
        let keys: Vec<&str> = ["certificates", "inputs", "result", "undecided", "verb"].to_vec();
        let positions: Vec<usize> = keys.iter().map(|k| text.find(&format!("\"{k}\"")).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
    }
}
