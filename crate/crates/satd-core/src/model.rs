//! Shared domain types, the artifact identifier scheme, and validation.
//!
//! Every artifact analyzed by the toolkit — code comments, commit messages,
//! pull-request sections, issue sections — is normalized into one
//! [`Artifact`] record. Identifiers are deterministic functions of the raw
//! data so that re-ingesting the same inputs yields the same ids.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use chrono::{DateTime, Utc};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// UTC timestamp used throughout the model. Date-only inputs are normalized
/// to midnight UTC at ingestion.
pub type Timestamp = DateTime<Utc>;

/// Identity of one mined repository.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RepoRef {
    pub host: String,
    pub owner: String,
    pub name: String,
    /// Local clone location, when one exists for this run.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub clone_path: Option<String>,
}

impl RepoRef {
    pub fn new(host: &str, owner: &str, name: &str) -> Self {
        RepoRef {
            host: host.to_string(),
            owner: owner.to_string(),
            name: name.to_string(),
            clone_path: None,
        }
    }

    /// `host/owner/name`, unique within a run.
    pub fn id(&self) -> String {
        format!("{}/{}/{}", self.host, self.owner, self.name)
    }

    pub fn is_valid(&self) -> bool {
        !self.owner.is_empty() && !self.name.is_empty()
    }
}

/// The six artifact kinds. Sections always carry a parent of the matching
/// main kind; comments and commits never do.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArtifactKind {
    Comment,
    Commit,
    PullRequest,
    Issue,
    PrSection,
    IssueSection,
}

impl ArtifactKind {
    /// Stable token used inside artifact ids and report rows.
    pub fn token(&self) -> &'static str {
        match self {
            ArtifactKind::Comment => "comment",
            ArtifactKind::Commit => "commit",
            ArtifactKind::PullRequest => "pull_request",
            ArtifactKind::Issue => "issue",
            ArtifactKind::PrSection => "pr_section",
            ArtifactKind::IssueSection => "issue_section",
        }
    }

    pub fn is_section(&self) -> bool {
        matches!(self, ArtifactKind::PrSection | ArtifactKind::IssueSection)
    }

    /// The main kind a section belongs to; identity for main kinds.
    pub fn main_kind(&self) -> ArtifactKind {
        match self {
            ArtifactKind::PrSection => ArtifactKind::PullRequest,
            ArtifactKind::IssueSection => ArtifactKind::Issue,
            k => *k,
        }
    }
}

/// Position of a section inside its parent pull request or issue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SectionRole {
    Title,
    Description,
    /// Zero-based position within the parent's discussion thread.
    DiscussionComment(u32),
}

impl SectionRole {
    /// Stable token used inside section ids.
    pub fn token(&self) -> String {
        match self {
            SectionRole::Title => "title".to_string(),
            SectionRole::Description => "description".to_string(),
            SectionRole::DiscussionComment(i) => format!("comment{i}"),
        }
    }
}

/// One analyzable text unit with its provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Artifact {
    pub id: String,
    pub repo: RepoRef,
    pub kind: ArtifactKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parent_id: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub role: Option<SectionRole>,
    pub text: String,
    pub created_at: Timestamp,
    pub author: String,
    /// Commit identity for `Commit` artifacts; snapshot provenance for
    /// `Comment` artifacts.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub commit_sha: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub file_path: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start_line: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub end_line: Option<u32>,
    pub token_count: u32,
}

/// Whitespace-delimited token count; the one token definition used for both
/// totals and length bins.
pub fn token_count(text: &str) -> u32 {
    text.split_whitespace().count() as u32
}

/// First eight hex characters of the SHA-256 of `text`. Used as the text
/// component of comment ids; computed over the normalized comment text so
/// that equal identities share a hash.
pub fn hash8(text: &str) -> String {
    let digest = Sha256::digest(text.as_bytes());
    hex::encode(&digest[..4])
}

/// Id constructors. Scheme: `repo|kind|natural-key`.
pub mod ids {
    use super::*;

    pub fn commit(repo: &RepoRef, sha: &str) -> String {
        format!("{}|commit|{}", repo.id(), sha)
    }

    pub fn pull_request(repo: &RepoRef, number: u64) -> String {
        format!("{}|pull_request|pr{}", repo.id(), number)
    }

    pub fn issue(repo: &RepoRef, number: u64) -> String {
        format!("{}|issue|issue{}", repo.id(), number)
    }

    pub fn pr_section(repo: &RepoRef, number: u64, role: SectionRole) -> String {
        format!("{}|pr_section|pr{}|{}", repo.id(), number, role.token())
    }

    pub fn issue_section(repo: &RepoRef, number: u64, role: SectionRole) -> String {
        format!("{}|issue_section|issue{}|{}", repo.id(), number, role.token())
    }

    /// Comment ids carry path, start line, the snapshot (or introducing)
    /// commit, and a hash of the normalized text.
    pub fn comment(repo: &RepoRef, path: &str, start_line: u32, sha: &str, text_hash8: &str) -> String {
        format!("{}|comment|{}:{}:{}:{}", repo.id(), path, start_line, sha, text_hash8)
    }

    /// Parse the `pr<N>` / `issue<N>` natural key out of a main-artifact id.
    pub fn number_of(id: &str) -> Option<u64> {
        let key = id.split('|').nth(2)?;
        let digits = key.strip_prefix("pr").or_else(|| key.strip_prefix("issue"))?;
        digits.parse().ok()
    }
}

/// The five debt classes plus the non-debt bucket.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SatdClass {
    CodeDesign,
    Documentation,
    Test,
    Requirement,
    Scientific,
    NonSatd,
}

impl SatdClass {
    pub fn token(&self) -> &'static str {
        match self {
            SatdClass::CodeDesign => "code_design",
            SatdClass::Documentation => "documentation",
            SatdClass::Test => "test",
            SatdClass::Requirement => "requirement",
            SatdClass::Scientific => "scientific",
            SatdClass::NonSatd => "non_satd",
        }
    }

    /// The five debt classes, in report order.
    pub fn debt_classes() -> [SatdClass; 5] {
        [
            SatdClass::CodeDesign,
            SatdClass::Documentation,
            SatdClass::Test,
            SatdClass::Requirement,
            SatdClass::Scientific,
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LabelSource {
    KeywordBaseline,
    LexiconBaseline,
    ExternalImport,
}

/// SATD classification outcome for one artifact.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SatdLabel {
    pub artifact_id: String,
    pub is_satd: bool,
    pub satd_class: SatdClass,
    /// Confidence in [0, 1].
    pub confidence: f64,
    pub source: LabelSource,
}

impl SatdLabel {
    /// `is_satd` and `satd_class` must agree: non-SATD iff `NonSatd`.
    pub fn is_consistent(&self) -> bool {
        (self.is_satd != matches!(self.satd_class, SatdClass::NonSatd))
            && (0.0..=1.0).contains(&self.confidence)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sentiment {
    Negative,
    NonNegative,
}

impl Sentiment {
    pub fn token(&self) -> &'static str {
        match self {
            Sentiment::Negative => "negative",
            Sentiment::NonNegative => "non_negative",
        }
    }
}

/// Binary sentiment outcome; `score` is the probability of `NonNegative`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SentimentLabel {
    pub artifact_id: String,
    pub label: Sentiment,
    pub score: f64,
    pub source: LabelSource,
}

/// One named invariant violation found by [`validate_artifact`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    EmptyRepoOwner,
    EmptyRepoName,
    SectionWithoutParent,
    ParentOnNonSection,
    SectionWithoutRole,
    LineSpanInverted,
    LineSpanBelowOne,
    TokenCountMismatch,
    CommitWithoutSha,
    MalformedSha,
}

impl Violation {
    pub fn describe(&self) -> &'static str {
        match self {
            Violation::EmptyRepoOwner => "repository owner empty",
            Violation::EmptyRepoName => "repository name empty",
            Violation::SectionWithoutParent => "section without parent",
            Violation::ParentOnNonSection => "parent set on non-section artifact",
            Violation::SectionWithoutRole => "section without role",
            Violation::LineSpanInverted => "line span inverted",
            Violation::LineSpanBelowOne => "line numbers must be 1-based",
            Violation::TokenCountMismatch => "token count does not match text",
            Violation::CommitWithoutSha => "commit artifact without commit sha",
            Violation::MalformedSha => "commit sha is not lowercase hex",
        }
    }
}

/// Validation outcome: `ok` or the full list of violated invariants.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationResult {
    pub violations: Vec<Violation>,
}

impl ValidationResult {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn is_hex_sha(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_hexdigit() && !c.is_ascii_uppercase())
}

/// Check every [`Artifact`] invariant; violations are data, not failures.
pub fn validate_artifact(a: &Artifact) -> ValidationResult {
    let mut violations = Vec::new();
    if a.repo.owner.is_empty() {
        violations.push(Violation::EmptyRepoOwner);
    }
    if a.repo.name.is_empty() {
        violations.push(Violation::EmptyRepoName);
    }
    if a.kind.is_section() {
        if a.parent_id.is_none() {
            violations.push(Violation::SectionWithoutParent);
        }
        if a.role.is_none() {
            violations.push(Violation::SectionWithoutRole);
        }
    } else if a.parent_id.is_some() {
        violations.push(Violation::ParentOnNonSection);
    }
    match (a.start_line, a.end_line) {
        (Some(s), Some(e)) => {
            if s < 1 || e < 1 {
                violations.push(Violation::LineSpanBelowOne);
            }
            if e < s {
                violations.push(Violation::LineSpanInverted);
            }
        }
        (None, None) => {}
        // Half-open spans are treated as inverted: both ends or neither.
        _ => violations.push(Violation::LineSpanInverted),
    }
    if a.token_count != token_count(&a.text) {
        violations.push(Violation::TokenCountMismatch);
    }
    if a.kind == ArtifactKind::Commit {
        match &a.commit_sha {
            None => violations.push(Violation::CommitWithoutSha),
            Some(sha) if !is_hex_sha(sha) => violations.push(Violation::MalformedSha),
            _ => {}
        }
    }
    ValidationResult { violations }
}

/// Split a pull request or issue into section artifacts: one `Title` when
/// the title is non-empty, one `Description` when the body is non-empty, and
/// one `DiscussionComment` per comment body, in thread order.
pub fn decompose_sections(
    repo: &RepoRef,
    kind: ArtifactKind,
    number: u64,
    parent_id: &str,
    title: &str,
    body: &str,
    created_at: Timestamp,
    author: &str,
    discussion: &[(String, Timestamp, String)],
) -> Vec<Artifact> {
    debug_assert!(matches!(kind, ArtifactKind::PullRequest | ArtifactKind::Issue));
    let section_kind = match kind {
        ArtifactKind::PullRequest => ArtifactKind::PrSection,
        _ => ArtifactKind::IssueSection,
    };
    let make_id = |role: SectionRole| match section_kind {
        ArtifactKind::PrSection => ids::pr_section(repo, number, role),
        _ => ids::issue_section(repo, number, role),
    };
    let mut out = Vec::new();
    let mut push = |role: SectionRole, text: &str, at: Timestamp, who: &str| {
        out.push(Artifact {
            id: make_id(role),
            repo: repo.clone(),
            kind: section_kind,
            parent_id: Some(parent_id.to_string()),
            role: Some(role),
            text: text.to_string(),
            created_at: at,
            author: who.to_string(),
            commit_sha: None,
            file_path: None,
            start_line: None,
            end_line: None,
            token_count: token_count(text),
        });
    };
    if !title.trim().is_empty() {
        push(SectionRole::Title, title, created_at, author);
    }
    if !body.trim().is_empty() {
        push(SectionRole::Description, body, created_at, author);
    }
    for (idx, (text, at, who)) in discussion.iter().enumerate() {
        push(SectionRole::DiscussionComment(idx as u32), text, *at, who);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use chrono::TimeZone;

    fn ts(s: &str) -> Timestamp {
        DateTime::parse_from_rfc3339(s).unwrap().with_timezone(&Utc)
    }

    fn repo() -> RepoRef {
        RepoRef::new("github.com", "acme", "demo")
    }

    fn commit_artifact() -> Artifact {
        let r = repo();
        Artifact {
            id: ids::commit(&r, "aaaa111122223333aaaa111122223333aaaa1111"),
            repo: r,
            kind: ArtifactKind::Commit,
            parent_id: None,
            role: None,
            text: "fix solver tolerance".to_string(),
            created_at: ts("2020-01-01T00:00:00Z"),
            author: "dev@example.com".to_string(),
            commit_sha: Some("aaaa111122223333aaaa111122223333aaaa1111".to_string()),
            file_path: None,
            start_line: None,
            end_line: None,
            token_count: 3,
        }
    }

    #[test]
    fn well_formed_commit_validates() {
        assert!(validate_artifact(&commit_artifact()).is_ok());
    }

    #[test]
    fn section_without_parent_is_named() {
        let mut a = commit_artifact();
        a.kind = ArtifactKind::PrSection;
        a.role = Some(SectionRole::Title);
        a.commit_sha = None;
        let result = validate_artifact(&a);
        assert!(result.violations.contains(&Violation::SectionWithoutParent));
    }

    #[test]
    fn inverted_span_is_named() {
        let mut a = commit_artifact();
        a.kind = ArtifactKind::Comment;
        a.commit_sha = None;
        a.start_line = Some(5);
        a.end_line = Some(3);
        let result = validate_artifact(&a);
        assert!(result.violations.contains(&Violation::LineSpanInverted));
    }

    #[test]
    fn token_count_is_whitespace_tokens() {
        assert_eq!(token_count("TODO:  fix\tthis\nlater"), 4);
        assert_eq!(token_count(""), 0);
        assert_eq!(token_count("   "), 0);
    }

    #[test]
    fn ids_are_deterministic() {
        let r = repo();
        assert_eq!(ids::pull_request(&r, 10), "github.com/acme/demo|pull_request|pr10");
        assert_eq!(
            ids::pr_section(&r, 10, SectionRole::DiscussionComment(2)),
            "github.com/acme/demo|pr_section|pr10|comment2"
        );
        assert_eq!(hash8("todo: fix this"), hash8("todo: fix this"));
        assert_eq!(hash8("x").len(), 8);
        assert_eq!(ids::number_of(&ids::issue(&r, 42)), Some(42));
        assert_eq!(ids::number_of(&ids::pull_request(&r, 7)), Some(7));
        assert_eq!(ids::number_of(&ids::commit(&r, "abc")), None);
    }

    #[test]
    fn decompose_emits_title_description_and_comments() {
        let r = repo();
        let at = ts("2021-06-01T10:00:00Z");
        let parent = ids::pull_request(&r, 10);
        let discussion = [
            ("first".to_string(), at, "alice".to_string()),
            ("second".to_string(), at, "bob".to_string()),
            ("third".to_string(), at, "carol".to_string()),
        ];
        let sections = decompose_sections(
            &r,
            ArtifactKind::PullRequest,
            10,
            &parent,
            "Fix the solver",
            "Long description",
            at,
            "alice",
            &discussion,
        );
        assert_eq!(sections.len(), 5);
        assert!(sections.iter().all(|s| s.parent_id.as_deref() == Some(parent.as_str())));
        let roles: Vec<_> = sections.iter().map(|s| s.role.unwrap()).collect();
        assert_eq!(
            roles,
            [
                SectionRole::Title,
                SectionRole::Description,
                SectionRole::DiscussionComment(0),
                SectionRole::DiscussionComment(1),
                SectionRole::DiscussionComment(2),
            ]
        );
        for s in &sections {
            assert!(validate_artifact(s).is_ok());
        }
    }

    #[test]
    fn decompose_empty_body_yields_title_only() {
        let r = repo();
        let at = Utc.with_ymd_and_hms(2021, 1, 1, 0, 0, 0).unwrap();
        let parent = ids::issue(&r, 3);
        let sections = decompose_sections(
            &r,
            ArtifactKind::Issue,
            3,
            &parent,
            "Crash on empty grid",
            "",
            at,
            "alice",
            &[],
        );
        assert_eq!(sections.len(), 1);
        assert_eq!(sections[0].role, Some(SectionRole::Title));
        assert_eq!(sections[0].kind, ArtifactKind::IssueSection);
    }

    #[test]
    fn artifact_jsonl_roundtrip_is_stable() {
        let a = commit_artifact();
        let line = serde_json::to_string(&a).unwrap();
        let back: Artifact = serde_json::from_str(&line).unwrap();
        assert_eq!(a, back);
        // Re-serialization is byte-identical.
        assert_eq!(line, serde_json::to_string(&back).unwrap());
        // snake_case field names on the wire.
        assert!(line.contains("\"created_at\""));
        assert!(line.contains("\"commit_sha\""));
        assert!(line.contains("\"token_count\""));
    }
}
