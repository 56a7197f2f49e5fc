//! Report types and their text / JSON / CSV renderings. Every numeric
//! value is carried as an exact decimal string; machine formats never go
//! through native integers.

use serde::{Deserialize, Serialize};

pub const CSV_HEADER: &str = "n,k,d,degree,method,value";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsOut {
    pub n: u32,
    pub k: u32,
    pub d: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HfReport {
    pub params: ParamsOut,
    pub method: String,
    pub values: Vec<String>,
    pub conjectural: bool,
    /// Set when a single degree was requested; `values` then has one entry.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
}

impl HfReport {
    pub fn text(&self) -> String {
        self.values.join(",")
    }

    pub fn csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        let p = self.params;
        for (idx, v) in self.values.iter().enumerate() {
            let degree = self.degree.unwrap_or(idx as u32);
            out.push_str(&format!("\n{},{},{},{},{},{}", p.n, p.k, p.d, degree, self.method, v));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub params: ParamsOut,
    pub method: String,
    /// Numerator coefficients by power of t, as decimal strings.
    pub numerator: Vec<String>,
    pub denom_exponent: u32,
    pub conjectural: bool,
}

impl SeriesReport {
    pub fn text(&self) -> String {
        self.numerator.join(",")
    }

    pub fn csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        let p = self.params;
        for (power, v) in self.numerator.iter().enumerate() {
            out.push_str(&format!("\n{},{},{},{},{},{}", p.n, p.k, p.d, power, self.method, v));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: u32,
    pub degree: u32,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BettiReport {
    pub params: ParamsOut,
    pub entries: Vec<BettiEntry>,
}

impl BettiReport {
    pub fn text(&self) -> String {
        self.entries
            .iter()
            .map(|e| format!("i={} degree={} beta={}", e.i, e.degree, e.value))
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        let p = self.params;
        for e in &self.entries {
            out.push_str(&format!("\n{},{},{},{},betti,{}", p.n, p.k, p.d, e.degree, e.value));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GensReport {
    pub params: ParamsOut,
    pub count: String,
}

impl GensReport {
    pub fn text(&self) -> String {
        self.count.clone()
    }

    pub fn csv(&self, gen_degree: u32) -> String {
        let p = self.params;
        format!("{CSV_HEADER}\n{},{},{},{},gens,{}", p.n, p.k, p.d, gen_degree, self.count)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FatGensReport {
    pub params: ParamsOut,
    pub degree: u32,
    pub generators: Vec<String>,
}

impl FatGensReport {
    pub fn text(&self) -> String {
        self.generators.join("\n")
    }

    pub fn csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        let p = self.params;
        for g in &self.generators {
            out.push_str(&format!("\n{},{},{},{},fat-gens,{}", p.n, p.k, p.d, self.degree, g));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub tuples: u64,
    pub values: u64,
    pub computed: u64,
    pub cached: u64,
    pub guarded: u64,
    pub disagreements: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DisagreementOut {
    pub n: u32,
    pub k: u32,
    pub d: u32,
    pub degree: u32,
    pub values: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub summary: VerifySummary,
    pub disagreements: Vec<DisagreementOut>,
}

impl VerifyReport {
    pub fn text(&self) -> String {
        let s = &self.summary;
        let mut out = format!(
            "tuples={} values={} computed={} cached={} guarded={} disagreements={}",
            s.tuples, s.values, s.computed, s.cached, s.guarded, s.disagreements
        );
        for d in &self.disagreements {
            let vals = d
                .values
                .iter()
                .map(|(m, v)| format!("{m}={v}"))
                .collect::<Vec<_>>()
                .join(" ");
            out.push_str(&format!("\ndisagreement: n={} k={} d={} degree={}: {vals}", d.n, d.k, d.d, d.degree));
            let methods = d.values.iter().map(|(m, _)| m.clone()).collect::<Vec<_>>().join(",");
            out.push_str(&format!(
                "\nreproduce: powideal verify --n {} --k {} --d {} --degrees {}:{} --methods {}",
                d.n, d.k, d.d, d.degree, d.degree, methods
            ));
        }
        out
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report serialization cannot fail")
}
