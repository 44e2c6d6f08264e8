#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "fdpgov/hash.hpp"
#include "fdpgov/model.hpp"
#include "fdpgov/policy.hpp"

namespace fdpgov {

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Questionnaire records
// ---------------------------------------------------------------------------

enum class Sensitivity { Low, Medium, High };
enum class ProjectStatus { Draft, Published, Closed };
enum class JoinState { Pending, Approved, Rejected, Withdrawn };

inline const char* to_string(Sensitivity s) {
    switch (s) {
        case Sensitivity::Low: return "low";
        case Sensitivity::Medium: return "medium";
        case Sensitivity::High: return "high";
    }
    return "?";
}
inline const char* to_string(ProjectStatus s) {
    switch (s) {
        case ProjectStatus::Draft: return "draft";
        case ProjectStatus::Published: return "published";
        case ProjectStatus::Closed: return "closed";
    }
    return "?";
}
inline const char* to_string(JoinState s) {
    switch (s) {
        case JoinState::Pending: return "pending";
        case JoinState::Approved: return "approved";
        case JoinState::Rejected: return "rejected";
        case JoinState::Withdrawn: return "withdrawn";
    }
    return "?";
}

struct ProjectDefinition {
    std::string id;
    std::string title;
    std::string institution;
    std::string contact_email;
    std::string objective;
    std::set<std::string> data_required;
    Sensitivity sensitivity = Sensitivity::Low;
    std::set<std::string> security_measures;
    std::string result_sharing;
    std::string participant_responsibilities;
    std::string legal_basis;
    bool third_party = false;
    OnboardingPolicy onboarding_policy;
    ProjectStatus status = ProjectStatus::Draft;
};

struct ParticipantProfile {
    std::string organization;
    std::string contact_person;
    std::string contact_email;
    std::string location;
    std::set<std::string> data_available;
    std::string data_sharing_constraints;
    bool consent_obtained = false;
    bool internal_review_required = false;
    std::string other_clauses;
};

struct JoinRequest {
    std::string id;
    std::string project;
    ParticipantProfile profile;
    Tick submitted_at = 0;
    JoinState state = JoinState::Pending;
    std::string evaluation_mode;  // "exact" | "semantic", recorded at first evaluation
    std::optional<json> decision_detail;
};

struct ChangeRecord {
    std::string reference;
    std::string subject;  // join-request id
    std::string field;
    std::string old_value;
    std::string new_value;
    Tick requested_at = 0;
    Tick processed_at = 0;
    Tick latency = 0;
    std::vector<std::string> propagated_to;
    bool notification_emitted = false;
};

// ---------------------------------------------------------------------------
// Hash-chained audit log
// ---------------------------------------------------------------------------

inline constexpr const char* kGenesisHash =
    "0000000000000000000000000000000000000000000000000000000000000000";

struct AuditEvent {
    std::uint64_t seq = 0;
    std::string kind;
    std::string payload_digest;
    std::string prev_hash;
    std::string hash;
};

inline std::string audit_event_hash(std::uint64_t seq, const std::string& kind,
                                    const std::string& payload_digest,
                                    const std::string& prev_hash) {
    return sha256_hex(std::to_string(seq) + "|" + kind + "|" + payload_digest + "|" + prev_hash);
}

struct ChainCheck {
    bool ok = true;
    std::size_t first_bad_index = 0;
};

inline ChainCheck verify_audit_chain(const std::vector<AuditEvent>& log) {
    std::string prev = kGenesisHash;
    for (std::size_t i = 0; i < log.size(); ++i) {
        const auto& e = log[i];
        if (e.seq != i || e.prev_hash != prev ||
            e.hash != audit_event_hash(e.seq, e.kind, e.payload_digest, e.prev_hash)) {
            return {false, i};
        }
        prev = e.hash;
    }
    return {true, log.size()};
}

// ---------------------------------------------------------------------------
// Schema validation
// ---------------------------------------------------------------------------

struct FieldIssue {
    std::string field;
    std::string message;
};

class SchemaError : public Error {
public:
    explicit SchemaError(std::vector<FieldIssue> issues)
        : Error(ErrorKind::SchemaViolation, render(issues)), issues_(std::move(issues)) {}

    const std::vector<FieldIssue>& issues() const { return issues_; }

private:
    static std::string render(const std::vector<FieldIssue>& issues) {
        std::string s = std::to_string(issues.size()) + " field issue(s)";
        for (const auto& i : issues) s += "; " + i.field + ": " + i.message;
        return s;
    }
    std::vector<FieldIssue> issues_;
};

inline bool valid_email(const std::string& s) {
    static const std::regex re(R"(^[^@\s]+@[^@\s]+\.[^@\s]+$)");
    return std::regex_match(s, re);
}

namespace detail {

inline std::string opt_string(const json& doc, const char* key) {
    return doc.contains(key) && doc[key].is_string() ? doc[key].get<std::string>() : "";
}

inline std::set<std::string> opt_tokens(const json& doc, const char* key) {
    std::set<std::string> out;
    if (doc.contains(key) && doc[key].is_array()) {
        for (const auto& v : doc[key]) out.insert(v.get<std::string>());
    }
    return out;
}

}  // namespace detail

inline ProjectDefinition validate_project(const json& doc) {
    std::vector<FieldIssue> issues;
    ProjectDefinition p;
    p.id = detail::opt_string(doc, "id");
    p.title = detail::opt_string(doc, "title");
    p.institution = detail::opt_string(doc, "institution");
    p.contact_email = detail::opt_string(doc, "contact_email");
    p.objective = detail::opt_string(doc, "objective");
    p.data_required = detail::opt_tokens(doc, "data_required");
    p.security_measures = detail::opt_tokens(doc, "security_measures");
    p.result_sharing = detail::opt_string(doc, "result_sharing");
    p.participant_responsibilities = detail::opt_string(doc, "participant_responsibilities");
    p.legal_basis = detail::opt_string(doc, "legal_basis");
    p.third_party = doc.contains("third_party") && doc["third_party"].is_boolean() &&
                    doc["third_party"].get<bool>();

    std::string sens = detail::opt_string(doc, "sensitivity");
    if (sens == "low") p.sensitivity = Sensitivity::Low;
    else if (sens == "medium") p.sensitivity = Sensitivity::Medium;
    else if (sens == "high") p.sensitivity = Sensitivity::High;
    else issues.push_back({"sensitivity", "must be one of low/medium/high"});

    std::string status = detail::opt_string(doc, "status");
    if (status.empty() || status == "draft") p.status = ProjectStatus::Draft;
    else if (status == "published") p.status = ProjectStatus::Published;
    else if (status == "closed") p.status = ProjectStatus::Closed;
    else issues.push_back({"status", "must be one of draft/published/closed"});

    if (p.contact_email.empty()) issues.push_back({"contact_email", "required"});
    else if (!valid_email(p.contact_email)) issues.push_back({"contact_email", "invalid email"});

    if (doc.contains("onboarding_policy")) {
        try {
            p.onboarding_policy = onboarding_policy_from_json(doc["onboarding_policy"]);
        } catch (const Error& e) {
            issues.push_back({"onboarding_policy", e.what()});
        }
    } else {
        issues.push_back({"onboarding_policy", "required"});
    }

    if (p.status == ProjectStatus::Published) {
        if (p.title.empty()) issues.push_back({"title", "required for published projects"});
        if (p.objective.empty()) issues.push_back({"objective", "required for published projects"});
        if (p.legal_basis.empty())
            issues.push_back({"legal_basis", "required for published projects"});
    }
    if (!issues.empty()) throw SchemaError(std::move(issues));
    return p;
}

inline ParticipantProfile validate_participant(const json& doc) {
    std::vector<FieldIssue> issues;
    ParticipantProfile p;
    p.organization = detail::opt_string(doc, "organization");
    p.contact_person = detail::opt_string(doc, "contact_person");
    p.contact_email = detail::opt_string(doc, "contact_email");
    p.location = detail::opt_string(doc, "location");
    p.data_available = detail::opt_tokens(doc, "data_available");
    p.data_sharing_constraints = detail::opt_string(doc, "data_sharing_constraints");
    p.consent_obtained = doc.value("consent_obtained", false);
    p.internal_review_required = doc.value("internal_review_required", false);
    p.other_clauses = detail::opt_string(doc, "other_clauses");

    if (p.organization.empty()) issues.push_back({"organization", "required"});
    if (p.location.empty()) issues.push_back({"location", "required"});
    if (p.contact_email.empty()) issues.push_back({"contact_email", "required"});
    else if (!valid_email(p.contact_email)) issues.push_back({"contact_email", "invalid email"});

    if (!issues.empty()) throw SchemaError(std::move(issues));
    return p;
}

inline json project_to_json(const ProjectDefinition& p) {
    json doc;
    doc["id"] = p.id;
    doc["title"] = p.title;
    doc["institution"] = p.institution;
    doc["contact_email"] = p.contact_email;
    doc["objective"] = p.objective;
    doc["data_required"] = p.data_required;
    doc["sensitivity"] = to_string(p.sensitivity);
    doc["security_measures"] = p.security_measures;
    doc["result_sharing"] = p.result_sharing;
    doc["participant_responsibilities"] = p.participant_responsibilities;
    doc["legal_basis"] = p.legal_basis;
    doc["third_party"] = p.third_party;
    doc["onboarding_policy"] = {{"acceptable_locations", p.onboarding_policy.acceptable_locations}};
    doc["status"] = to_string(p.status);
    return doc;
}

inline json participant_to_json(const ParticipantProfile& p) {
    json doc;
    doc["organization"] = p.organization;
    doc["contact_person"] = p.contact_person;
    doc["contact_email"] = p.contact_email;
    doc["location"] = p.location;
    doc["data_available"] = p.data_available;
    doc["data_sharing_constraints"] = p.data_sharing_constraints;
    doc["consent_obtained"] = p.consent_obtained;
    doc["internal_review_required"] = p.internal_review_required;
    doc["other_clauses"] = p.other_clauses;
    return doc;
}

inline json join_request_to_json(const JoinRequest& r) {
    json doc;
    doc["id"] = r.id;
    doc["project"] = r.project;
    doc["profile"] = participant_to_json(r.profile);
    doc["submitted_at"] = r.submitted_at;
    doc["state"] = to_string(r.state);
    doc["evaluation_mode"] = r.evaluation_mode;
    if (r.decision_detail) doc["decision_detail"] = *r.decision_detail;
    return doc;
}

inline JoinRequest join_request_from_json(const json& doc) {
    JoinRequest r;
    r.id = doc.at("id").get<std::string>();
    r.project = doc.at("project").get<std::string>();
    r.profile = validate_participant(doc.at("profile"));
    r.submitted_at = doc.at("submitted_at").get<Tick>();
    std::string st = doc.at("state").get<std::string>();
    if (st == "pending") r.state = JoinState::Pending;
    else if (st == "approved") r.state = JoinState::Approved;
    else if (st == "rejected") r.state = JoinState::Rejected;
    else r.state = JoinState::Withdrawn;
    r.evaluation_mode = doc.value("evaluation_mode", "");
    if (doc.contains("decision_detail")) r.decision_detail = doc["decision_detail"];
    return r;
}

inline json change_record_to_json(const ChangeRecord& c) {
    json doc;
    doc["reference"] = c.reference;
    doc["subject"] = c.subject;
    doc["field"] = c.field;
    doc["old_value"] = c.old_value;
    doc["new_value"] = c.new_value;
    doc["requested_at"] = c.requested_at;
    doc["processed_at"] = c.processed_at;
    doc["latency"] = c.latency;
    doc["propagated_to"] = c.propagated_to;
    doc["notification_emitted"] = c.notification_emitted;
    return doc;
}

// ---------------------------------------------------------------------------
// Store: directory of JSON files (projects/, requests/, audit.jsonl,
// outbox.jsonl, changes.jsonl). Single writer; `now` is always
// caller-supplied, the store never reads a system clock.
// ---------------------------------------------------------------------------

struct AgreementResult {
    std::string text;
    std::string region;  // clause block used
    bool used_default = false;
};

struct StubResult {
    bool implemented = false;
    std::string note;
};

class OnboardingStore {
public:
    explicit OnboardingStore(fs::path root) : root_(std::move(root)) {
        fs::create_directories(root_ / "projects");
        fs::create_directories(root_ / "requests");
    }

    const fs::path& root() const { return root_; }

    std::string create_project(const json& doc) {
        ProjectDefinition p = validate_project(doc);
        if (p.id.empty()) p.id = "prj-" + std::to_string(count_files("projects") + 1);
        write_json(project_path(p.id), project_to_json(p));
        append_audit("project_created", project_to_json(p));
        return p.id;
    }

    ProjectDefinition load_project(const std::string& id) const {
        return validate_project(read_json(project_path(id)));
    }

    std::string submit_join(const std::string& project_id, const json& profile_doc, Tick now) {
        ProjectDefinition project = load_project(project_id);
        if (project.status != ProjectStatus::Published) {
            throw Error(ErrorKind::ProjectNotPublished, "project '" + project_id + "'");
        }
        JoinRequest r;
        r.id = "req-" + std::to_string(count_files("requests") + 1);
        r.project = project_id;
        r.profile = validate_participant(profile_doc);
        r.submitted_at = now;
        r.state = JoinState::Pending;
        write_json(request_path(r.id), join_request_to_json(r));
        append_audit("join_submitted", join_request_to_json(r));
        return r.id;
    }

    JoinRequest load_request(const std::string& id) const {
        return join_request_from_json(read_json(request_path(id)));
    }

    /// Evaluates a pending request against the project's location policy and
    /// transitions it to approved or rejected. Appends an audit event either
    /// way.
    JoinRequest evaluate_join(const std::string& request_id, const LocationOntology& ontology,
                              const std::string& mode, Tick now) {
        JoinRequest r = load_request(request_id);
        if (r.state != JoinState::Pending) {
            throw Error(ErrorKind::InvalidState,
                        "request '" + request_id + "' is " + to_string(r.state));
        }
        ProjectDefinition project = load_project(r.project);
        if (project.status != ProjectStatus::Published) {
            throw Error(ErrorKind::ProjectNotPublished, "project '" + r.project + "'");
        }
        apply_evaluation(r, project, ontology, mode, now);
        write_json(request_path(r.id), join_request_to_json(r));
        append_audit("join_evaluated", join_request_to_json(r));
        return r;
    }

    /// Rectifies one profile field (GDPR Art. 16 at desk scale). Validation
    /// first, then the change record, propagation when the field feeds the
    /// policy, a notification outbox entry, and audit events for all of it.
    ChangeRecord rectify_field(const std::string& request_id, const std::string& field,
                               const std::string& new_value, Tick now, bool reevaluate,
                               const LocationOntology& ontology) {
        JoinRequest r = load_request(request_id);
        if (r.state == JoinState::Withdrawn) {
            throw Error(ErrorKind::InvalidState, "request '" + request_id + "' is withdrawn");
        }
        std::string old_value = get_field(r.profile, field);  // throws UnknownField
        set_field(r.profile, field, new_value);               // throws SchemaViolation

        ChangeRecord c;
        c.reference = "chg-" + std::to_string(count_lines("changes.jsonl") + 1);
        c.subject = request_id;
        c.field = field;
        c.old_value = old_value;
        c.new_value = new_value;
        c.requested_at = now;
        c.processed_at = now;
        c.latency = c.processed_at - c.requested_at;

        if (reevaluate && field == "location") {
            ProjectDefinition project = load_project(r.project);
            std::string mode = r.evaluation_mode.empty() ? "exact" : r.evaluation_mode;
            apply_evaluation(r, project, ontology, mode, now);
            c.propagated_to.push_back(r.id);
        }
        write_json(request_path(r.id), join_request_to_json(r));

        json notification;
        notification["subject"] = request_id;
        notification["reference"] = c.reference;
        notification["field"] = field;
        notification["old_value"] = old_value;
        notification["new_value"] = new_value;
        notification["at"] = now;
        append_line("outbox.jsonl", notification.dump());
        c.notification_emitted = true;

        append_line("changes.jsonl", change_record_to_json(c).dump());
        append_audit("rectification", change_record_to_json(c));
        return c;
    }

    /// Deterministic data use agreement: project fields plus a clause block
    /// selected by the participant's canonical region (falls back to the
    /// default block with a warning).
    AgreementResult generate_agreement(const std::string& request_id,
                                       const LocationOntology& ontology) const {
        JoinRequest r = load_request(request_id);
        if (r.state != JoinState::Approved) {
            throw Error(ErrorKind::InvalidState, "request '" + request_id + "' is not approved");
        }
        ProjectDefinition project = load_project(r.project);
        return render_agreement(project, r.profile, ontology);
    }

    static AgreementResult render_agreement(const ProjectDefinition& project,
                                            const ParticipantProfile& profile,
                                            const LocationOntology& ontology) {
        std::string region = ontology.canonical(profile.location);
        const auto& clauses = clause_blocks();
        auto it = clauses.find(region);
        if (it == clauses.end()) {
            // climb the containment relation looking for a region with a block
            for (const auto& [key, text] : clauses) {
                if (key != "default" && ontology.is_subregion(region, key)) {
                    it = clauses.find(key);
                    break;
                }
            }
        }
        AgreementResult out;
        if (it == clauses.end()) {
            it = clauses.find("default");
            out.used_default = true;
        }
        out.region = it->first;

        std::ostringstream doc;
        doc << "DATA USE AGREEMENT\n"
            << "==================\n"
            << "Project: " << project.title << "\n"
            << "Institution: " << project.institution << "\n"
            << "Objective: " << project.objective << "\n"
            << "Legal basis: " << project.legal_basis << "\n"
            << "Sensitivity: " << to_string(project.sensitivity) << "\n"
            << "Participant: " << profile.organization << "\n"
            << "Participant region: " << region << "\n"
            << "\nRegional clauses (" << it->first << "):\n"
            << it->second << "\n"
            << "\nResult sharing: " << project.result_sharing << "\n"
            << "Participant responsibilities: " << project.participant_responsibilities << "\n";
        out.text = doc.str();
        return out;
    }

    /// Identity verification (multi-factor, ID validation) needs external
    /// infrastructure; recorded in the audit trail and reported as not
    /// implemented.
    StubResult verify_identity(const std::string& request_id) {
        append_audit("identity_verification_requested", json{{"subject", request_id}});
        return {false, "identity verification requires an external provider"};
    }

    /// Third-party rectification sharing likewise; the notification intent is
    /// auditable even though no delivery channel exists here.
    StubResult notify_third_parties(const std::string& change_reference) {
        append_audit("third_party_notification_requested", json{{"reference", change_reference}});
        return {false, "third-party delivery channel is deployment-specific"};
    }

    std::vector<AuditEvent> audit_log() const {
        std::vector<AuditEvent> log;
        std::ifstream in(root_ / "audit.jsonl");
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            json j = json::parse(line);
            log.push_back({j.at("seq").get<std::uint64_t>(), j.at("kind").get<std::string>(),
                           j.at("payload_digest").get<std::string>(),
                           j.at("prev_hash").get<std::string>(), j.at("hash").get<std::string>()});
        }
        return log;
    }

    ChainCheck verify_audit() const { return verify_audit_chain(audit_log()); }

    std::vector<ChangeRecord> change_records() const {
        std::vector<ChangeRecord> out;
        std::ifstream in(root_ / "changes.jsonl");
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            json j = json::parse(line);
            ChangeRecord c;
            c.reference = j.at("reference").get<std::string>();
            c.subject = j.at("subject").get<std::string>();
            c.field = j.at("field").get<std::string>();
            c.old_value = j.at("old_value").get<std::string>();
            c.new_value = j.at("new_value").get<std::string>();
            c.requested_at = j.at("requested_at").get<Tick>();
            c.processed_at = j.at("processed_at").get<Tick>();
            c.latency = j.at("latency").get<Tick>();
            for (const auto& p : j.at("propagated_to")) c.propagated_to.push_back(p.get<std::string>());
            c.notification_emitted = j.at("notification_emitted").get<bool>();
            out.push_back(std::move(c));
        }
        return out;
    }

private:
    void apply_evaluation(JoinRequest& r, const ProjectDefinition& project,
                          const LocationOntology& ontology, const std::string& mode, Tick now) {
        json detail;
        bool allow = false;
        if (mode == "semantic") {
            auto res = onboarding_allow_semantic(project.onboarding_policy, r.profile.location,
                                                 ontology);
            allow = res.allow;
            detail["allow"] = res.allow;
            detail["mode"] = "semantic";
            if (res.via) detail["via"] = *res.via;
        } else {
            allow = onboarding_allow(project.onboarding_policy, r.profile.location);
            detail["allow"] = allow;
            detail["mode"] = "exact";
        }
        detail["location"] = r.profile.location;
        detail["at"] = now;
        r.state = allow ? JoinState::Approved : JoinState::Rejected;
        r.evaluation_mode = mode;
        r.decision_detail = detail;
    }

    static std::string get_field(const ParticipantProfile& p, const std::string& field) {
        if (field == "organization") return p.organization;
        if (field == "contact_person") return p.contact_person;
        if (field == "contact_email") return p.contact_email;
        if (field == "location") return p.location;
        if (field == "data_sharing_constraints") return p.data_sharing_constraints;
        if (field == "other_clauses") return p.other_clauses;
        throw Error(ErrorKind::UnknownField, "field '" + field + "' is not rectifiable");
    }

    static void set_field(ParticipantProfile& p, const std::string& field,
                          const std::string& value) {
        if (field == "contact_email" && !valid_email(value)) {
            throw SchemaError(std::vector<FieldIssue>{{"contact_email", "invalid email"}});
        }
        if ((field == "organization" || field == "location") && value.empty()) {
            throw SchemaError(std::vector<FieldIssue>{{field, "must be non-empty"}});
        }
        if (field == "organization") p.organization = value;
        else if (field == "contact_person") p.contact_person = value;
        else if (field == "contact_email") p.contact_email = value;
        else if (field == "location") p.location = value;
        else if (field == "data_sharing_constraints") p.data_sharing_constraints = value;
        else p.other_clauses = value;
    }

    static const std::map<std::string, std::string>& clause_blocks() {
        static const std::map<std::string, std::string> blocks = {
            {"EU",
             "  - Processing is governed by Regulation (EU) 2016/679 (GDPR).\n"
             "  - Data remains within EU jurisdiction; transfers require an adequacy basis.\n"
             "  - Data subjects retain rights of access, rectification and erasure."},
            {"default",
             "  - Processing is governed by the applicable local data protection law.\n"
             "  - Cross-border transfers require a documented legal basis."},
        };
        return blocks;
    }

    fs::path project_path(const std::string& id) const {
        return root_ / "projects" / (id + ".json");
    }
    fs::path request_path(const std::string& id) const {
        return root_ / "requests" / (id + ".json");
    }

    std::size_t count_files(const std::string& dir) const {
        std::size_t n = 0;
        for (const auto& e : fs::directory_iterator(root_ / dir)) {
            (void)e;
            ++n;
        }
        return n;
    }

    std::size_t count_lines(const std::string& file) const {
        std::ifstream in(root_ / file);
        std::string line;
        std::size_t n = 0;
        while (std::getline(in, line)) {
            if (!line.empty()) ++n;
        }
        return n;
    }

    json read_json(const fs::path& path) const {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "'");
        try {
            return json::parse(in);
        } catch (const json::parse_error& e) {
            throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
        }
    }

    void write_json(const fs::path& path, const json& doc) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "'");
        out << doc.dump(2) << "\n";
    }

    void append_line(const std::string& file, const std::string& line) const {
        std::ofstream out(root_ / file, std::ios::binary | std::ios::app);
        out << line << "\n";
    }

    void append_audit(const std::string& kind, const json& payload) {
        auto log = audit_log();
        AuditEvent e;
        e.seq = log.size();
        e.kind = kind;
        e.payload_digest = sha256_hex(payload.dump());
        e.prev_hash = log.empty() ? kGenesisHash : log.back().hash;
        e.hash = audit_event_hash(e.seq, e.kind, e.payload_digest, e.prev_hash);
        json j;
        j["seq"] = e.seq;
        j["kind"] = e.kind;
        j["payload_digest"] = e.payload_digest;
        j["prev_hash"] = e.prev_hash;
        j["hash"] = e.hash;
        append_line("audit.jsonl", j.dump());
    }

    fs::path root_;
};

}  // namespace fdpgov
