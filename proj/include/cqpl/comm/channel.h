// Copyright 2026 The cqpl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cqpl/error.h"
#include "cqpl/interp/ports.h"

namespace cqpl::comm {

/// FIFO of typed items from `origin` to `destination`.
struct Channel {
    std::string origin;
    std::string destination;
    std::deque<interp::Item> fifo;
};

/// Unbounded channels for every ordered pair of known modules. Sends never
/// block; a receive takes its items only once all of them are queued.
class ChannelSet : public interp::ChannelPort {
   public:
    explicit ChannelSet(std::set<std::string> modules) : modules_(std::move(modules)) {
    }

    void send(const std::string &from, const std::string &to, std::vector<interp::Item> items) override;
    std::optional<std::vector<interp::Item>> try_receive(
        const std::string &from, const std::string &to,
        std::span<const types::TypeSignature> expected) override;

    const Channel *find(const std::string &from, const std::string &to) const;
    size_t queued(const std::string &from, const std::string &to) const;
    /// Heap indices currently in flight, one list per quantum item.
    std::vector<std::vector<int>> in_flight() const;
    const std::map<std::pair<std::string, std::string>, Channel> &channels() const {
        return channels_;
    }

   private:
    std::set<std::string> modules_;
    std::map<std::pair<std::string, std::string>, Channel> channels_;
};

}  // namespace cqpl::comm
