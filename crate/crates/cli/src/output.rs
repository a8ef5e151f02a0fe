use serde_json::{Map, Value};

use crate::args::Format;

/// One result record. Text mode prints `key: value` lines followed by any
/// preformatted blocks; records mode prints the fields as a JSON object.
pub struct Output {
    pub command: &'static str,
    pub fields: Map<String, Value>,
    pub blocks: Vec<String>,
}

impl Output {
    pub fn new(command: &'static str) -> Self {
        Output {
            command,
            fields: Map::new(),
            blocks: Vec::new(),
        }
    }

    pub fn field(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.insert(key.to_string(), value.into());
        self
    }

    pub fn block(mut self, text: String) -> Self {
        self.blocks.push(text);
        self
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            items.iter().map(text_value).collect::<Vec<_>>().join(" ")
        }
        other => other.to_string(),
    }
}

pub fn render(outputs: &[Output], format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Records => {
            for o in outputs {
                let mut obj = Map::new();
                obj.insert("command".into(), o.command.into());
                obj.extend(o.fields.clone());
                s.push_str(&Value::Object(obj).to_string());
                s.push('\n');
            }
        }
        Format::Text => {
            for (i, o) in outputs.iter().enumerate() {
                if i > 0 {
                    s.push('\n');
                }
                for (k, v) in &o.fields {
                    s.push_str(&format!("{k}: {}\n", text_value(v)));
                }
                for b in &o.blocks {
                    s.push_str(b);
                    if !b.ends_with('\n') {
                        s.push('\n');
                    }
                }
            }
        }
    }
    s
}
