#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sim/message.hpp"

namespace provaud::sim {

/// Synchronous in-process message bus. publish() delivers to matching
/// subscribers immediately, in subscription order, and records the message
/// in the history. Topics are a fixed vocabulary; subscriptions may name a
/// topic exactly or use the "prov.*" wildcard.
class MessageBus {
public:
    using Handler = std::function<void(const BusMessage&)>;

    static bool is_valid_topic(const std::string& topic);

    /// `filter` is an exact topic or "prov.*". Raises UnknownTopic otherwise.
    void subscribe(const std::string& filter, Handler handler);

    /// Raises UnknownTopic for a topic outside the vocabulary.
    void publish(const BusMessage& msg);

    /// Every published message in publish order.
    const std::vector<BusMessage>& history() const { return history_; }

private:
    struct Subscription {
        std::string filter;
        Handler handler;
    };
    static bool matches(const std::string& filter, const std::string& topic);

    std::vector<Subscription> subs_;
    std::vector<BusMessage> history_;
};

} // namespace provaud::sim
