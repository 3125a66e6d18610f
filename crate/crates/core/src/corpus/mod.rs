//! The 24-email stimulus corpus: generation, validation, and persistence.
//!
//! A corpus holds 12 phishing and 12 legitimate emails built under structural
//! rules: bodies of 50-100 words containing one hyperlink, HTTPS links for
//! legitimate mail, and links with at least two suspicious characteristics
//! (five or more domain dots, more than 75 characters, an IP-address host, or
//! a misspelled brand domain) for phishing mail. Legitimate bodies carry
//! targeted messaging (recipient name, student status, or city); phishing
//! bodies carry none.
//!
//! The on-disk format is JSON Lines, one object per email.

mod brands;
mod generator;

use std::fmt;
use std::fs;
use std::io::{BufWriter, Write as _};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use brands::DEFAULT_BRANDS;
pub use generator::{generate_corpus, TemplateBank};

/// Class of an email stimulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Phishing,
    Legitimate,
}

impl Label {
    /// Numeric encoding used by the classifiers; phishing is the positive class.
    pub fn as_class(self) -> u8 {
        match self {
            Label::Phishing => 1,
            Label::Legitimate => 0,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Phishing => write!(f, "phishing"),
            Label::Legitimate => write!(f, "legitimate"),
        }
    }
}

/// One crafted email stimulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmailSample {
    pub id: String,
    pub sender_address: String,
    pub subject: String,
    pub body_text: String,
    pub url: String,
    pub label: Label,
}

impl EmailSample {
    pub fn body_word_count(&self) -> usize {
        self.body_text.split_whitespace().count()
    }
}

/// Structural features of one URL.
///
/// `contains_misspelling` is decided by an explicit rule: a domain label (other
/// than `www` and the final TLD label, and at least four characters long) that
/// is not itself a brand name but sits at Damerau-Levenshtein distance 1-2
/// from one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UrlFeatureReport {
    pub has_https: bool,
    pub domain_dot_count: usize,
    pub url_length: usize,
    pub contains_ip: bool,
    pub contains_misspelling: bool,
    pub suspicious_count: usize,
}

/// An ordered email collection, optionally tagged with its generation seed.
///
/// The seed is generation metadata only; the JSONL wire format carries the
/// samples alone, so a loaded corpus always has `seed: None`.
#[derive(Debug, Clone, PartialEq)]
pub struct Corpus {
    pub samples: Vec<EmailSample>,
    pub seed: Option<u64>,
}

impl Corpus {
    /// (phishing, legitimate) counts.
    pub fn class_counts(&self) -> (usize, usize) {
        let phishing = self
            .samples
            .iter()
            .filter(|s| s.label == Label::Phishing)
            .count();
        (phishing, self.samples.len() - phishing)
    }

    pub fn ids_unique(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.samples.iter().all(|s| seen.insert(s.id.as_str()))
    }
}

/// A named violation of the email structural rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    BodyWordCountOutOfRange,
    BodyMissingUrl,
    LegitimateRequiresHttps,
    PhishingRequiresHttpsAbsent,
    PhishingRequiresTwoSuspiciousFeatures,
    UrlMalformed,
}

impl Violation {
    pub fn as_str(self) -> &'static str {
        match self {
            Violation::BodyWordCountOutOfRange => "body-word-count-out-of-range",
            Violation::BodyMissingUrl => "body-missing-url",
            Violation::LegitimateRequiresHttps => "legitimate-requires-https",
            Violation::PhishingRequiresHttpsAbsent => "phishing-requires-https-absent",
            Violation::PhishingRequiresTwoSuspiciousFeatures => {
                "phishing-requires-two-suspicious-features"
            }
            Violation::UrlMalformed => "url-malformed",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Extract the domain of a URL: the text between the scheme separator and the
/// first `/` (or end of string), with any `:port` suffix removed.
fn extract_domain(url: &str) -> Result<&str> {
    let sep = url
        .find("://")
        .ok_or_else(|| Error::MalformedUrl(format!("no scheme separator in {url:?}")))?;
    let scheme = &url[..sep];
    if scheme.is_empty() || !scheme.chars().all(|c| c.is_ascii_alphanumeric()) {
        return Err(Error::MalformedUrl(format!("invalid scheme in {url:?}")));
    }
    let rest = &url[sep + 3..];
    let host_end = rest.find('/').unwrap_or(rest.len());
    let mut host = &rest[..host_end];
    if let Some(colon) = host.find(':') {
        host = &host[..colon];
    }
    if host.is_empty() {
        return Err(Error::MalformedUrl(format!("empty domain in {url:?}")));
    }
    Ok(host)
}

fn is_dotted_quad(host: &str) -> bool {
    let parts: Vec<&str> = host.split('.').collect();
    parts.len() == 4
        && parts
            .iter()
            .all(|p| !p.is_empty() && p.chars().all(|c| c.is_ascii_digit()) && p.parse::<u8>().is_ok())
}

/// Damerau-Levenshtein distance (optimal string alignment variant).
pub fn damerau_levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let (n, m) = (a.len(), b.len());
    if n == 0 {
        return m;
    }
    if m == 0 {
        return n;
    }
    let mut d = vec![vec![0usize; m + 1]; n + 1];
    for (i, row) in d.iter_mut().enumerate() {
        row[0] = i;
    }
    for j in 0..=m {
        d[0][j] = j;
    }
    for i in 1..=n {
        for j in 1..=m {
            let cost = usize::from(a[i - 1] != b[j - 1]);
            let mut best = (d[i - 1][j] + 1).min(d[i][j - 1] + 1).min(d[i - 1][j - 1] + cost);
            if i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1] {
                best = best.min(d[i - 2][j - 2] + 1);
            }
            d[i][j] = best;
        }
    }
    d[n][m]
}

fn label_is_misspelled_brand(label: &str, brand_list: &[&str]) -> bool {
    if label.len() < 4 || label == "www" {
        return false;
    }
    if brand_list.contains(&label) {
        return false;
    }
    brand_list
        .iter()
        .any(|brand| matches!(damerau_levenshtein(label, brand), 1 | 2))
}

/// Compute the five URL features and the suspicious-feature count.
pub fn analyze_url(url: &str, brand_list: &[&str]) -> Result<UrlFeatureReport> {
    if url.is_empty() {
        return Err(Error::MalformedUrl("empty url".into()));
    }
    let domain = extract_domain(url)?;
    let has_https = url.starts_with("https://");
    let domain_dot_count = domain.matches('.').count();
    let url_length = url.chars().count();
    let contains_ip = is_dotted_quad(domain);

    let labels: Vec<&str> = domain.split('.').collect();
    // The final label is the TLD; never test it against the brand list.
    let candidates = if labels.len() > 1 {
        &labels[..labels.len() - 1]
    } else {
        &labels[..]
    };
    let contains_misspelling = !contains_ip
        && candidates
            .iter()
            .any(|label| label_is_misspelled_brand(label, brand_list));

    let suspicious_count = usize::from(domain_dot_count >= 5)
        + usize::from(url_length > 75)
        + usize::from(contains_ip)
        + usize::from(contains_misspelling);

    Ok(UrlFeatureReport {
        has_https,
        domain_dot_count,
        url_length,
        contains_ip,
        contains_misspelling,
        suspicious_count,
    })
}

/// Check one sample against every structural rule; an empty result means ok.
pub fn validate_sample(sample: &EmailSample, brand_list: &[&str]) -> Vec<Violation> {
    let mut violations = Vec::new();

    let words = sample.body_word_count();
    if !(50..=100).contains(&words) {
        violations.push(Violation::BodyWordCountOutOfRange);
    }
    if !sample.body_text.contains(&sample.url) {
        violations.push(Violation::BodyMissingUrl);
    }

    match sample.label {
        Label::Legitimate => {
            if !sample.url.starts_with("https://") {
                violations.push(Violation::LegitimateRequiresHttps);
            }
        }
        Label::Phishing => {
            if sample.url.starts_with("https://") {
                violations.push(Violation::PhishingRequiresHttpsAbsent);
            }
            match analyze_url(&sample.url, brand_list) {
                Ok(report) if report.suspicious_count < 2 => {
                    violations.push(Violation::PhishingRequiresTwoSuspiciousFeatures);
                }
                Ok(_) => {}
                Err(_) => violations.push(Violation::UrlMalformed),
            }
        }
    }
    violations
}

/// Write a corpus as JSON Lines.
pub fn save_corpus(corpus: &Corpus, path: &Path) -> Result<()> {
    let file = fs::File::create(path)?;
    let mut out = BufWriter::new(file);
    for sample in &corpus.samples {
        let line = serde_json::to_string(sample)
            .map_err(|e| Error::Config(format!("serialization failure: {e}")))?;
        writeln!(out, "{line}")?;
    }
    out.flush()?;
    Ok(())
}

/// A corpus read back from disk plus any non-fatal structural warnings.
#[derive(Debug, Clone)]
pub struct LoadedCorpus {
    pub corpus: Corpus,
    pub warnings: Vec<String>,
}

/// Read a JSONL corpus. Schema violations are hard errors naming the line;
/// a sample count other than 24 (or an uneven class split) is only a warning.
pub fn load_corpus(path: &Path) -> Result<LoadedCorpus> {
    let text = fs::read_to_string(path)?;
    let mut samples = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let sample: EmailSample = serde_json::from_str(line).map_err(|e| Error::Parse {
            line: idx + 1,
            message: e.to_string(),
        })?;
        samples.push(sample);
    }

    let corpus = Corpus {
        samples,
        seed: None,
    };
    let mut warnings = Vec::new();
    if corpus.samples.len() != 24 {
        warnings.push(format!(
            "expected 24 samples, found {}",
            corpus.samples.len()
        ));
    } else {
        let (phishing, legitimate) = corpus.class_counts();
        if phishing != 12 {
            warnings.push(format!(
                "expected a 12/12 class split, found {phishing} phishing / {legitimate} legitimate"
            ));
        }
    }
    if !corpus.ids_unique() {
        warnings.push("duplicate sample ids".into());
    }
    Ok(LoadedCorpus { corpus, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(label: Label, url: &str, body_words: usize) -> EmailSample {
        let mut body: Vec<String> = (0..body_words - 1).map(|i| format!("word{i}")).collect();
        body.push(url.to_string());
        EmailSample {
            id: "t01".into(),
            sender_address: "sender@example.org".into(),
            subject: "subject".into(),
            body_text: body.join(" "),
            url: url.into(),
            label,
        }
    }

    #[test]
    fn analyze_simple_https() {
        let report = analyze_url("https://example.com/verify", DEFAULT_BRANDS).unwrap();
        assert!(report.has_https);
        assert_eq!(report.domain_dot_count, 1);
        assert!(!report.contains_ip);
        assert!(!report.contains_misspelling);
        assert_eq!(report.suspicious_count, 0);
    }

    #[test]
    fn analyze_ip_host() {
        let report = analyze_url("http://192.168.4.12/login", DEFAULT_BRANDS).unwrap();
        assert!(!report.has_https);
        assert!(report.contains_ip);
        assert!(report.suspicious_count >= 1);
    }

    #[test]
    fn analyze_dots_and_length() {
        // 30 chars of scheme+domain, 15 of path, 52 of filler: 97 total.
        let url = format!(
            "http://a.b.c.d.e.f.example.com/session?token={}",
            "x".repeat(52)
        );
        assert_eq!(url.chars().count(), 97);
        let report = analyze_url(&url, DEFAULT_BRANDS).unwrap();
        assert_eq!(report.domain_dot_count, 7);
        assert_eq!(report.url_length, 97);
        assert!(!report.contains_ip);
        assert!(!report.contains_misspelling);
        assert_eq!(report.suspicious_count, 2);
    }

    #[test]
    fn analyze_strips_port() {
        let report = analyze_url("http://example.com:8080/x", DEFAULT_BRANDS).unwrap();
        assert_eq!(report.domain_dot_count, 1);
    }

    #[test]
    fn analyze_rejects_malformed() {
        assert!(analyze_url("", DEFAULT_BRANDS).is_err());
        assert!(analyze_url("example.com/no-scheme", DEFAULT_BRANDS).is_err());
        assert!(analyze_url("http:///empty-host", DEFAULT_BRANDS).is_err());
        assert!(analyze_url("ht tp://x.com", DEFAULT_BRANDS).is_err());
    }

    #[test]
    fn misspelling_detection() {
        let report = analyze_url("http://www.spottify.com/login", DEFAULT_BRANDS).unwrap();
        assert!(report.contains_misspelling);
        // Exact brand names are not misspellings.
        let report = analyze_url("https://spotify.com/login", DEFAULT_BRANDS).unwrap();
        assert!(!report.contains_misspelling);
    }

    #[test]
    fn damerau_levenshtein_cases() {
        assert_eq!(damerau_levenshtein("", ""), 0);
        assert_eq!(damerau_levenshtein("abc", "abc"), 0);
        assert_eq!(damerau_levenshtein("abc", "abd"), 1);
        assert_eq!(damerau_levenshtein("abc", "acb"), 1); // transposition
        assert_eq!(damerau_levenshtein("spotify", "spottify"), 1);
        assert_eq!(damerau_levenshtein("kitten", "sitting"), 3);
    }

    #[test]
    fn validate_accepts_good_legitimate() {
        let s = sample(Label::Legitimate, "https://example.com/x", 60);
        assert!(validate_sample(&s, DEFAULT_BRANDS).is_empty());
    }

    #[test]
    fn validate_flags_http_legitimate() {
        let s = sample(Label::Legitimate, "http://example.com/x", 60);
        assert_eq!(
            validate_sample(&s, DEFAULT_BRANDS),
            vec![Violation::LegitimateRequiresHttps]
        );
    }

    #[test]
    fn validate_flags_weak_phishing_url() {
        // Only one suspicious feature (an IP host).
        let s = sample(Label::Phishing, "http://10.0.0.1/x", 60);
        assert_eq!(
            validate_sample(&s, DEFAULT_BRANDS),
            vec![Violation::PhishingRequiresTwoSuspiciousFeatures]
        );
    }

    #[test]
    fn validate_flags_word_count_and_missing_url() {
        let mut s = sample(Label::Legitimate, "https://example.com/x", 30);
        s.body_text = "too short".into();
        let violations = validate_sample(&s, DEFAULT_BRANDS);
        assert!(violations.contains(&Violation::BodyWordCountOutOfRange));
        assert!(violations.contains(&Violation::BodyMissingUrl));
    }

    #[test]
    fn corpus_roundtrip() {
        let dir = std::env::temp_dir().join(format!("phishvec-corpus-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("roundtrip.jsonl");
        let corpus = Corpus {
            samples: vec![
                sample(Label::Legitimate, "https://example.com/a", 55),
                sample(Label::Phishing, "http://a.b.c.d.e.f.example.com/b", 55),
            ],
            seed: Some(3),
        };
        save_corpus(&corpus, &path).unwrap();
        let loaded = load_corpus(&path).unwrap();
        assert_eq!(loaded.corpus.samples, corpus.samples);
        assert_eq!(loaded.corpus.seed, None);
        assert!(!loaded.warnings.is_empty()); // 2 samples, not 24
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn load_reports_line_of_bad_record() {
        let dir = std::env::temp_dir().join(format!("phishvec-badline-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bad.jsonl");
        let good = serde_json::to_string(&sample(Label::Legitimate, "https://e.com/a", 55)).unwrap();
        std::fs::write(&path, format!("{good}\n{{\"id\":\"x\"}}\n")).unwrap();
        let err = load_corpus(&path).unwrap_err();
        match err {
            Error::Parse { line, message } => {
                assert_eq!(line, 2);
                assert!(message.contains("missing field"), "{message}");
            }
            other => panic!("unexpected error {other:?}"),
        }
        std::fs::remove_dir_all(&dir).ok();
    }
}
