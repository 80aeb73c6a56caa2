#include "critgraph/error.hpp"

#include <cstdlib>
#include <string>

#include "critgraph/budget.hpp"

namespace critgraph {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DisconnectedInput: return "DisconnectedInput";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::EdgeAbsent: return "EdgeAbsent";
    case ErrorKind::NotTwoConnected: return "NotTwoConnected";
    case ErrorKind::BadAnchor: return "BadAnchor";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotCritical: return "NotCritical";
    case ErrorKind::NoTwoCut: return "NoTwoCut";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::ScaleGuard: return "ScaleGuard";
    case ErrorKind::UnknownCheck: return "UnknownCheck";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(what), kind_(kind) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what),
      line_(line) {}

Budget Budget::from_env() {
  Budget budget;
  if (const char* env = std::getenv("CRITGRAPH_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) budget.max_items = value;
  }
  return budget;
}

Budget Budget::with_time_limit(std::chrono::milliseconds limit) const {
  Budget copy = *this;
  copy.deadline = std::chrono::steady_clock::now() + limit;
  return copy;
}

void BudgetMeter::charge_item() {
  if (++items_ > budget_.max_items) {
    throw Error(ErrorKind::BudgetExceeded,
                "enumeration exceeded the item cap of " +
                    std::to_string(budget_.max_items));
  }
  if ((items_ & 0xFFF) == 0) check_deadline();
}

void BudgetMeter::tick() {
  if ((++ticks_ & 0xFFFF) == 0) check_deadline();
}

void BudgetMeter::check_deadline() const {
  if (budget_.deadline && std::chrono::steady_clock::now() > *budget_.deadline) {
    throw Error(ErrorKind::BudgetExceeded, "time limit exceeded");
  }
}

}  // namespace critgraph
