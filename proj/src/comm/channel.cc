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

#include "cqpl/comm/channel.h"

#include <algorithm>

namespace cqpl::comm {

void ChannelSet::send(const std::string &from, const std::string &to, std::vector<interp::Item> items) {
    if (!modules_.contains(to)) {
        throw Error(ErrorCode::E_UNKNOWN_MODULE, "send to unknown module '" + to + "'");
    }
    if (from == to) {
        throw Error(ErrorCode::E_SELF_SEND, "module '" + from + "' cannot send to itself");
    }
    Channel &ch = channels_[{from, to}];
    ch.origin = from;
    ch.destination = to;
    for (auto &item : items) {
        ch.fifo.push_back(std::move(item));
    }
}

std::optional<std::vector<interp::Item>> ChannelSet::try_receive(const std::string &from, const std::string &to,
                                                                  std::span<const types::TypeSignature> expected) {
    if (!modules_.contains(from)) {
        throw Error(ErrorCode::E_UNKNOWN_MODULE, "receive from unknown module '" + from + "'");
    }
    auto it = channels_.find({from, to});
    size_t available = it == channels_.end() ? 0 : it->second.fifo.size();
    size_t checkable = std::min(available, expected.size());
    for (size_t i = 0; i < checkable; i++) {
        const auto &got = it->second.fifo[i].type;
        if (!types::type_equiv(got, expected[i])) {
            throw Error(ErrorCode::E_RECV_TYPE, "receive from " + from + " expected " +
                                                    types::to_string(expected[i]) + " but the channel holds " +
                                                    types::to_string(got));
        }
    }
    if (available < expected.size()) {
        return std::nullopt;
    }
    std::vector<interp::Item> out;
    for (size_t i = 0; i < expected.size(); i++) {
        out.push_back(std::move(it->second.fifo.front()));
        it->second.fifo.pop_front();
    }
    return out;
}

const Channel *ChannelSet::find(const std::string &from, const std::string &to) const {
    auto it = channels_.find({from, to});
    return it == channels_.end() ? nullptr : &it->second;
}

size_t ChannelSet::queued(const std::string &from, const std::string &to) const {
    const Channel *ch = find(from, to);
    return ch ? ch->fifo.size() : 0;
}

std::vector<std::vector<int>> ChannelSet::in_flight() const {
    std::vector<std::vector<int>> out;
    for (const auto &[key, ch] : channels_) {
        for (const auto &item : ch.fifo) {
            if (auto *idx = std::get_if<std::vector<int>>(&item.payload)) {
                out.push_back(*idx);
            }
        }
    }
    return out;
}

}  // namespace cqpl::comm
