#include "unimodal/serialization.hpp"

namespace unimodal {

nlohmann::json to_json(const UnimodalSequence& seq) {
    return {{"n", seq.size()}, {"parts", seq.parts()}};
}

nlohmann::json to_json(const Overpartition& op) {
    return {{"n", op.size()}, {"parts", op.parts()}, {"marked", op.marked()}};
}

namespace {

template <class T>
T field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key))
        throw ValidationError(std::string("record is missing the field: ") + key);
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ValidationError(std::string("record field has the wrong type: ") + key);
    }
}

} // namespace

UnimodalSequence sequence_from_json(const nlohmann::json& j) {
    auto seq = UnimodalSequence::from_parts(field<std::vector<long>>(j, "parts"));
    if (field<long long>(j, "n") != seq.size())
        throw ValidationError("record field n does not match the part sum");
    return seq;
}

Overpartition overpartition_from_json(const nlohmann::json& j) {
    auto op = Overpartition::from_parts(field<std::vector<long>>(j, "parts"),
                                        field<std::vector<bool>>(j, "marked"));
    if (field<long long>(j, "n") != op.size())
        throw ValidationError("record field n does not match the part sum");
    return op;
}

std::string to_json_line(const UnimodalSequence& seq) {
    return to_json(seq).dump();
}

std::string to_json_line(const Overpartition& op) {
    return to_json(op).dump();
}

} // namespace unimodal
