use std::io::{self, Write};

use serde::Serialize;

use revmult::{BlockForm, EnumerationRecord};

#[derive(Debug, Serialize)]
pub struct Params {
    pub l: Vec<usize>,
    pub m: Vec<usize>,
}

impl From<&BlockForm> for Params {
    fn from(form: &BlockForm) -> Self {
        Params {
            l: form.block_params().to_vec(),
            m: form.separator_params().to_vec(),
        }
    }
}

/// One line of machine-readable output.
#[derive(Debug, Default, Serialize)]
pub struct Record {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    pub base: u32,
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<Params>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    /// Exact count, as a decimal string.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub states: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reachable_states: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub initial_states: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub feasible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dot: Option<String>,
}

impl Record {
    pub fn from_enumeration(r: &EnumerationRecord, form: Option<&BlockForm>) -> Self {
        Record {
            value: Some(r.value.to_string()),
            base: r.base,
            k: Some(r.k),
            length: Some(r.length),
            params: form.map(Params::from),
            source: Some(r.source.to_string()),
            ..Default::default()
        }
    }
}

/// Writes either the human line or the JSON record for each result.
pub struct Output {
    json: bool,
    stdout: io::StdoutLock<'static>,
}

impl Output {
    pub fn new(json: bool) -> Self {
        Output {
            json,
            stdout: io::stdout().lock(),
        }
    }

    pub fn emit(&mut self, human: &str, record: &Record) -> io::Result<()> {
        if self.json {
            let line = serde_json::to_string(record).map_err(io::Error::other)?;
            writeln!(self.stdout, "{line}")
        } else {
            writeln!(self.stdout, "{human}")
        }
    }
}
