use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    /// The command ran; nothing was being tested.
    Ok,
    Pass,
    /// A verified failure, backed by witnesses.
    Fail,
}

/// What a command prints. Only `text` is printed in text mode; the rest is the
/// JSON report. No timing is recorded, so reruns are byte-identical.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    /// Always carries the scope (`shape`, `n`, `degree`) of the run.
    pub parameters: Value,
    pub outcome: Outcome,
    pub result: Value,
    pub witnesses: Vec<String>,
    #[serde(skip)]
    pub text: String,
}

impl Report {
    pub fn new(command: &str, parameters: Value) -> Self {
        Report {
            command: command.to_string(),
            parameters,
            outcome: Outcome::Ok,
            result: Value::Null,
            witnesses: Vec::new(),
            text: String::new(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self.outcome {
            Outcome::Fail => 1,
            _ => 0,
        }
    }
}
