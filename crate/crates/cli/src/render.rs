//! Human-readable rendering for `--plain`.

use interbraid::cabling::DerivedBraids;
use interbraid::interchange::{HexagonReport, ScreenOutcome, ScreenVerdict};
use interbraid::links::{ConjugacyVerdict, ObstructionReport};
use interbraid::search::{CosetReport, SearchReport};
use interbraid::{
    BraidWord, ClassificationResult, InterchangeReport, LinkSummary, NormalForm, Permutation,
};

pub trait Plain {
    fn plain(&self) -> String;
}

impl Plain for BraidWord {
    fn plain(&self) -> String {
        self.to_string()
    }
}

impl Plain for bool {
    fn plain(&self) -> String {
        self.to_string()
    }
}

impl Plain for Permutation {
    fn plain(&self) -> String {
        let images: Vec<String> = self.one_based().iter().map(usize::to_string).collect();
        format!("[{}] = {}", images.join(" "), self)
    }
}

impl Plain for NormalForm {
    fn plain(&self) -> String {
        let mut out = format!("Δ^{}", self.delta_power);
        for f in &self.factors {
            let images: Vec<String> = f
                .permutation()
                .one_based()
                .iter()
                .map(usize::to_string)
                .collect();
            out.push_str(&format!(" [{}]", images.join(" ")));
        }
        out
    }
}

impl Plain for DerivedBraids {
    fn plain(&self) -> String {
        format!(
            "b  = {}\nL  = {}\nR  = {}\nL' = {}\nR' = {}\nLb = Rb: {}\nL'b = R'b: {}",
            self.braid, self.l, self.r, self.lp, self.rp, self.internal_assoc, self.external_assoc
        )
    }
}

fn pairs(p: &[(usize, usize)]) -> String {
    let items: Vec<String> = p.iter().map(|(a, b)| format!("{{{a},{b}}}")).collect();
    if items.is_empty() {
        "none".into()
    } else {
        items.join(" ")
    }
}

impl Plain for InterchangeReport {
    fn plain(&self) -> String {
        format!(
            "candidate: {}\npermutation (2 3): {}\nunit failures: {}\nLb = Rb: {}\nL'b = R'b: {}\ninterchanging: {}",
            self.candidate,
            self.permutation_ok,
            pairs(&self.unit_failures),
            self.internal_assoc,
            self.external_assoc,
            self.interchanging
        )
    }
}

impl Plain for ClassificationResult {
    fn plain(&self) -> String {
        self.to_string()
    }
}

impl Plain for Vec<ScreenOutcome> {
    fn plain(&self) -> String {
        self.iter()
            .map(|o| {
                let v = match o.verdict {
                    ScreenVerdict::NotApplicable => "not applicable",
                    ScreenVerdict::Applicable { pass: true } => "pass",
                    ScreenVerdict::Applicable { pass: false } => "fail",
                };
                format!("{:?}: {v}", o.screen)
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl Plain for HexagonReport {
    fn plain(&self) -> String {
        format!(
            "k = {}\n{}  vs  {}\nfirst hexagon: {}\nsecond hexagon: {}",
            self.k, self.left, self.right, self.first, self.second
        )
    }
}

impl Plain for LinkSummary {
    fn plain(&self) -> String {
        let mut lines = Vec::new();
        for (i, c) in self.components.iter().enumerate() {
            let strands: Vec<String> = c.iter().map(usize::to_string).collect();
            lines.push(format!(
                "component {}: strands {} (self crossings {})",
                i + 1,
                strands.join(","),
                self.writhe_per_component[i]
            ));
        }
        for p in &self.pairwise_lk {
            lines.push(format!("lk({}, {}) = {}", p.first + 1, p.second + 1, p.lk));
        }
        lines.join("\n")
    }
}

impl Plain for ObstructionReport {
    fn plain(&self) -> String {
        let verdict = match &self.verdict {
            ConjugacyVerdict::DistinctClosures { reasons } => {
                format!("not conjugate ({reasons:?})")
            }
            ConjugacyVerdict::Inconclusive => "inconclusive".into(),
        };
        format!(
            "{}: lk {:?}\n{}: lk {:?}\n{verdict}",
            self.parallel, self.parallel_lk, self.crossed, self.crossed_lk
        )
    }
}

impl Plain for SearchReport {
    fn plain(&self) -> String {
        let mut lines = vec![format!(
            "max_len {}: {} words, {} candidates in {} classes, {} interchanging, {} anomalies",
            self.max_len,
            self.words_enumerated,
            self.candidates,
            self.candidate_classes,
            self.interchanging.len(),
            self.anomalies.len()
        )];
        for r in &self.interchanging {
            lines.push(format!("{}  {}", r.witness, r.classification));
        }
        for a in &self.anomalies {
            lines.push(format!("anomaly {:?}: {}", a.kind, a.witness));
        }
        lines.join("\n")
    }
}

impl Plain for CosetReport {
    fn plain(&self) -> String {
        let mut lines = vec![format!(
            "{} samples, {} violations of Lb = Rb",
            self.samples.len(),
            self.violations.len()
        )];
        for v in &self.violations {
            lines.push(format!("h={} a={} c={}: {}", v.h, v.a, v.c, v.word));
        }
        lines.join("\n")
    }
}
