/*
 * Copyright 2026 The stabdec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "stabdec/coalition.hpp"

#include <algorithm>

#include "stabdec/error.hpp"

namespace stabdec {

namespace {

Coalition::mask_type bit_for(Agent i)
{
    if (i < 1 || i > kMaxAgents)
        throw Error(Errc::agent_out_of_range, "agent " + std::to_string(i) + " outside 1.." +
                                                  std::to_string(kMaxAgents));
    return Coalition::mask_type{1} << (i - 1);
}

} // namespace

Coalition::Coalition(std::initializer_list<Agent> members)
{
    for (Agent i : members)
        mask_ |= bit_for(i);
}

Coalition Coalition::of(std::span<const Agent> members)
{
    mask_type m = 0;
    for (Agent i : members)
        m |= bit_for(i);
    return Coalition(m);
}

Coalition Coalition::parse_label(std::string_view label)
{
    mask_type m = 0;
    for (char ch : label) {
        Agent i = 0;
        if (ch >= '1' && ch <= '9')
            i = ch - '0';
        else if (ch >= 'a' && ch <= 'z')
            i = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'Z')
            i = ch - 'A' + 10;
        else
            throw Error(Errc::malformed_input, "bad agent character '" + std::string(1, ch) +
                                                   "' in coalition label '" + std::string(label) + "'");
        const mask_type bit = bit_for(i);
        if (m & bit)
            throw Error(Errc::malformed_input, "repeated agent in coalition label '" +
                                                   std::string(label) + "'");
        m |= bit;
    }
    if (m == 0)
        throw Error(Errc::malformed_input, "empty coalition label");
    return Coalition(m);
}

std::vector<Agent> Coalition::members() const
{
    std::vector<Agent> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (mask_type m = mask_; m != 0; m &= m - 1)
        out.push_back(std::countr_zero(m) + 1);
    return out;
}

std::string Coalition::to_string() const
{
    std::string out = "{";
    bool first = true;
    for (Agent i : members()) {
        if (!first)
            out += ',';
        out += std::to_string(i);
        first = false;
    }
    out += '}';
    return out;
}

std::string agent_label(Agent i)
{
    if (i >= 1 && i <= 9)
        return std::string(1, static_cast<char>('0' + i));
    if (i >= 10 && i <= 35)
        return std::string(1, static_cast<char>('a' + (i - 10)));
    return std::to_string(i);
}

std::string Coalition::label() const
{
    if (greatest() > 35)
        return to_string();
    std::string out;
    for (Agent i : members())
        out += agent_label(i);
    return out;
}

void canonicalize(CoalitionCollection& collection)
{
    std::sort(collection.begin(), collection.end());
    collection.erase(std::unique(collection.begin(), collection.end()), collection.end());
}

CoalitionCollection canonical(CoalitionCollection collection)
{
    canonicalize(collection);
    return collection;
}

Coalition agents_of(std::span<const Coalition> collection) noexcept
{
    Coalition out;
    for (Coalition c : collection)
        out |= c;
    return out;
}

bool pairwise_disjoint(std::span<const Coalition> collection) noexcept
{
    Coalition seen;
    for (Coalition c : collection) {
        if (seen.intersects(c))
            return false;
        seen |= c;
    }
    return true;
}

std::string render_collection(std::span<const Coalition> collection)
{
    std::string out = "{";
    for (std::size_t k = 0; k < collection.size(); ++k) {
        if (k)
            out += ',';
        out += collection[k].label();
    }
    out += '}';
    return out;
}

} // namespace stabdec
