//! JSON Schema validation for the keyword subset used by the shipped schemas:
//! `type`, `enum`, `const`, `required`, `properties`, `additionalProperties`,
//! `items`, `minItems`, `maxItems`, `minimum`, `pattern`, `oneOf`, `anyOf`, and
//! `$ref` to `#/$defs/...` or to a sibling schema file.

use std::collections::HashMap;
use std::fs;
use std::path::PathBuf;

use regex::Regex;
use serde_json::Value;

pub struct Validator {
    dir: PathBuf,
    loaded: HashMap<String, Value>,
}

impl Validator {
    pub fn new(dir: PathBuf) -> Self {
        Validator {
            dir,
            loaded: HashMap::new(),
        }
    }

    fn load(&mut self, file: &str) -> Value {
        if let Some(v) = self.loaded.get(file) {
            return v.clone();
        }
        let text = fs::read_to_string(self.dir.join(file)).unwrap_or_else(|e| panic!("{file}: {e}"));
        let v: Value = serde_json::from_str(&text).unwrap();
        self.loaded.insert(file.to_string(), v.clone());
        v
    }

    pub fn validate(&mut self, file: &str, value: &Value) -> Vec<String> {
        let root = self.load(file);
        let mut errors = Vec::new();
        self.check(&root, &root, value, "$", &mut errors);
        errors
    }

    fn check(&mut self, root: &Value, schema: &Value, value: &Value, at: &str, errors: &mut Vec<String>) {
        let s = match schema {
            Value::Bool(true) => return,
            Value::Bool(false) => return errors.push(format!("{at}: schema is false")),
            Value::Object(s) => s,
            _ => panic!("unsupported schema at {at}"),
        };
        if let Some(Value::String(r)) = s.get("$ref") {
            if let Some(name) = r.strip_prefix("#/$defs/") {
                let target = root["$defs"][name].clone();
                assert!(!target.is_null(), "missing definition {r}");
                self.check(root, &target, value, at, errors);
            } else {
                let other = self.load(r);
                self.check(&other.clone(), &other, value, at, errors);
            }
        }
        if let Some(t) = s.get("type") {
            let allowed: Vec<&str> = match t {
                Value::String(one) => vec![one.as_str()],
                Value::Array(many) => many.iter().map(|v| v.as_str().unwrap()).collect(),
                _ => panic!("bad type keyword"),
            };
            if !allowed.iter().any(|t| type_matches(t, value)) {
                errors.push(format!("{at}: expected {allowed:?}, got {value}"));
                return;
            }
        }
        if let Some(Value::Array(options)) = s.get("enum") {
            if !options.contains(value) {
                errors.push(format!("{at}: {value} not in {options:?}"));
            }
        }
        if let Some(c) = s.get("const") {
            if c != value {
                errors.push(format!("{at}: {value} != {c}"));
            }
        }
        if let (Some(min), Some(x)) = (s.get("minimum").and_then(Value::as_f64), value.as_f64()) {
            if x < min {
                errors.push(format!("{at}: {x} < {min}"));
            }
        }
        if let (Some(Value::String(p)), Value::String(text)) = (s.get("pattern"), value) {
            if !Regex::new(p).unwrap().is_match(text) {
                errors.push(format!("{at}: {text:?} does not match {p}"));
            }
        }
        if let Value::Object(obj) = value {
            if let Some(Value::Array(req)) = s.get("required") {
                for r in req {
                    if !obj.contains_key(r.as_str().unwrap()) {
                        errors.push(format!("{at}: missing {r}"));
                    }
                }
            }
            let props = s.get("properties").and_then(Value::as_object);
            for (k, v) in obj {
                match props.and_then(|p| p.get(k)) {
                    Some(sub) => self.check(root, &sub.clone(), v, &format!("{at}.{k}"), errors),
                    None if s.get("additionalProperties") == Some(&Value::Bool(false)) => {
                        errors.push(format!("{at}: unexpected property {k}"))
                    }
                    None => {}
                }
            }
        }
        if let Value::Array(items) = value {
            if let Some(min) = s.get("minItems").and_then(Value::as_u64) {
                if (items.len() as u64) < min {
                    errors.push(format!("{at}: fewer than {min} items"));
                }
            }
            if let Some(max) = s.get("maxItems").and_then(Value::as_u64) {
                if items.len() as u64 > max {
                    errors.push(format!("{at}: more than {max} items"));
                }
            }
            if let Some(item) = s.get("items") {
                for (i, v) in items.iter().enumerate() {
                    self.check(root, &item.clone(), v, &format!("{at}[{i}]"), errors);
                }
            }
        }
        for (key, exactly_one) in [("oneOf", true), ("anyOf", false)] {
            if let Some(Value::Array(options)) = s.get(key) {
                let passing = options
                    .iter()
                    .filter(|o| {
                        let mut errs = Vec::new();
                        self.check(root, o, value, at, &mut errs);
                        errs.is_empty()
                    })
                    .count();
                let ok = if exactly_one { passing == 1 } else { passing >= 1 };
                if !ok {
                    errors.push(format!("{at}: {passing} branches of {key} match"));
                }
            }
        }
    }
}

fn type_matches(t: &str, v: &Value) -> bool {
    match t {
        "null" => v.is_null(),
        "boolean" => v.is_boolean(),
        "object" => v.is_object(),
        "array" => v.is_array(),
        "string" => v.is_string(),
        "number" => v.is_number(),
        "integer" => v.is_i64() || v.is_u64(),
        _ => panic!("unknown type {t}"),
    }
}
