#include "hima/advisors/agent_io.hpp"

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <cstring>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "hima/textio/parse.hpp"

namespace hima::advisors {

AgentEndpoint endpoint_from_env() {
    AgentEndpoint ep;
    if (const char* e = std::getenv("HIMA_AGENT_ENDPOINT"); e && *e) ep.target = e;
    if (const char* t = std::getenv("HIMA_AGENT_TIMEOUT"); t && *t) ep.timeout_seconds = std::atoi(t);
    return ep;
}

namespace {

std::string request_document(const AgentRequest& request) {
    nlohmann::json j;
    j["system"] = request.system;
    j["input"] = request.input;
    j["params"] = {{"temperature", request.params.temperature},
                   {"max_actions", request.params.max_actions}};
    return j.dump();
}

std::string output_field(const std::string& body) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedReply(std::string("bad json: ") + e.what());
    }
    if (!j.contains("output") || !j["output"].is_string())
        throw MalformedReply("reply lacks an output field");
    return j["output"].get<std::string>();
}

std::string call_http(const AgentEndpoint& endpoint, const std::string& body) {
    // Split "http://host:port/path".
    std::string rest = endpoint.target.substr(endpoint.target.find("//") + 2);
    std::string path = "/";
    if (auto slash = rest.find('/'); slash != std::string::npos) {
        path = rest.substr(slash);
        rest = rest.substr(0, slash);
    }
    httplib::Client client(("http://" + rest).c_str());
    client.set_connection_timeout(endpoint.timeout_seconds, 0);
    client.set_read_timeout(endpoint.timeout_seconds, 0);
    client.set_write_timeout(endpoint.timeout_seconds, 0);
    auto res = client.Post(path, body, "application/json");
    if (!res) throw Timeout(endpoint.timeout_seconds);
    if (res->status != 200)
        throw MalformedReply("http status " + std::to_string(res->status));
    return res->body;
}

// Line-oriented local pipe: spawn the command, write one request
// document, read one reply document, with a hard deadline.
std::string call_pipe(const AgentEndpoint& endpoint, const std::string& body) {
    std::string command = endpoint.target.substr(4);  // strip "cmd:"
    int to_child[2], from_child[2];
    if (pipe(to_child) != 0 || pipe(from_child) != 0) throw Error("pipe() failed");
    pid_t pid = fork();
    if (pid < 0) throw Error("fork() failed");
    if (pid == 0) {
        dup2(to_child[0], STDIN_FILENO);
        dup2(from_child[1], STDOUT_FILENO);
        close(to_child[0]);
        close(to_child[1]);
        close(from_child[0]);
        close(from_child[1]);
        execl("/bin/sh", "sh", "-c", command.c_str(), (char*)nullptr);
        _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);

    std::string line = body + "\n";
    ssize_t written = write(to_child[1], line.data(), line.size());
    close(to_child[1]);
    if (written < 0) {
        kill(pid, SIGKILL);
        waitpid(pid, nullptr, 0);
        close(from_child[0]);
        throw Error("pipe write failed");
    }

    std::string reply;
    char buf[4096];
    int remaining_ms = endpoint.timeout_seconds * 1000;
    bool timed_out = false;
    while (true) {
        pollfd pfd{from_child[0], POLLIN, 0};
        int rc = poll(&pfd, 1, remaining_ms);
        if (rc <= 0) {
            timed_out = true;
            break;
        }
        ssize_t n = read(from_child[0], buf, sizeof(buf));
        if (n <= 0) break;
        reply.append(buf, static_cast<std::size_t>(n));
        if (reply.find('\n') != std::string::npos) break;
    }
    close(from_child[0]);
    if (timed_out) kill(pid, SIGKILL);
    waitpid(pid, nullptr, 0);
    if (timed_out) throw Timeout(endpoint.timeout_seconds);
    if (auto nl = reply.find('\n'); nl != std::string::npos) reply.resize(nl);
    if (reply.empty()) throw MalformedReply("empty pipe reply");
    return reply;
}

}  // namespace

std::string call_agent(const AgentEndpoint& endpoint, const AgentRequest& request) {
    if (!endpoint.configured()) throw EndpointUnconfigured();
    std::string body = request_document(request);
    std::string reply;
    if (endpoint.target.rfind("cmd:", 0) == 0)
        reply = call_pipe(endpoint, body);
    else if (endpoint.target.rfind("http://", 0) == 0)
        reply = call_http(endpoint, body);
    else
        throw ConfigError("unsupported endpoint scheme: " + endpoint.target);
    return output_field(reply);
}

Proposal external_exchange(const AgentEndpoint& endpoint, const std::string& system_prompt,
                           const std::string& state_text, const AgentParams& params,
                           const world::ActionCatalog& catalog) {
    if (!endpoint.configured()) throw EndpointUnconfigured();
    AgentRequest request{system_prompt, state_text, params};
    std::string output = call_agent(endpoint, request);

    auto parsed = textio::parse_action_sequence(output, catalog);
    if (parsed.actions.empty()) throw MalformedReply("no actions recoverable from reply");

    Proposal p;
    p.agent_id = "external";
    p.tactical_rationale = output;
    int n = std::min<int>(static_cast<int>(parsed.actions.size()), params.max_actions);
    for (int i = 0; i < n; ++i)
        p.window.push_back({parsed.actions[static_cast<std::size_t>(i)].action_id,
                            std::min(i, params.window_seconds - 1)});
    for (const auto& issue : parsed.issues)
        p.quality_flags.push_back(issue.kind == textio::ParseIssueKind::UnknownAction
                                      ? "unknown action: " + issue.token
                                      : "no actions found");
    return p;
}

}  // namespace hima::advisors
