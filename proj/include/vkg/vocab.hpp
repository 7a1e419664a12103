#pragma once

#include <string_view>

// Fixed vocabulary of the unified vision graph. All entity and annotation
// predicates/classes live under one ontology namespace; data entities are
// minted under per-kind paths (see ingest.hpp).
namespace vkg::vocab {

inline constexpr std::string_view Base = "http://vision.semkg.org/";
inline constexpr std::string_view Onto = "http://vision.semkg.org/onto/";

// predicates
inline constexpr std::string_view HasBox = "http://vision.semkg.org/onto/hasBox";
inline constexpr std::string_view HasObject = "http://vision.semkg.org/onto/hasObject";
inline constexpr std::string_view HasRelation = "http://vision.semkg.org/onto/hasRelation";
inline constexpr std::string_view RelSubject = "http://vision.semkg.org/onto/relSubject";
inline constexpr std::string_view RelObject = "http://vision.semkg.org/onto/relObject";
inline constexpr std::string_view RelPredicateText =
    "http://vision.semkg.org/onto/relPredicateText";
inline constexpr std::string_view RawLabel = "http://vision.semkg.org/onto/rawLabel";
inline constexpr std::string_view FromDataset = "http://vision.semkg.org/onto/fromDataset";
inline constexpr std::string_view FileName = "http://vision.semkg.org/onto/fileName";
inline constexpr std::string_view Width = "http://vision.semkg.org/onto/width";
inline constexpr std::string_view Height = "http://vision.semkg.org/onto/height";
inline constexpr std::string_view XMin = "http://vision.semkg.org/onto/xMin";
inline constexpr std::string_view YMin = "http://vision.semkg.org/onto/yMin";
inline constexpr std::string_view XMax = "http://vision.semkg.org/onto/xMax";
inline constexpr std::string_view YMax = "http://vision.semkg.org/onto/yMax";
inline constexpr std::string_view TrainedOn = "http://vision.semkg.org/onto/trainedOn";
inline constexpr std::string_view DetectsClass = "http://vision.semkg.org/onto/detectsClass";
inline constexpr std::string_view MetricName = "http://vision.semkg.org/onto/metricName";
inline constexpr std::string_view MetricValue = "http://vision.semkg.org/onto/metricValue";
inline constexpr std::string_view Evaluates = "http://vision.semkg.org/onto/evaluates";
inline constexpr std::string_view SceneTag = "http://vision.semkg.org/onto/sceneTag";

// classes
inline constexpr std::string_view Image = "http://vision.semkg.org/onto/Image";
inline constexpr std::string_view Box = "http://vision.semkg.org/onto/Box";
inline constexpr std::string_view VisualObject = "http://vision.semkg.org/onto/VisualObject";
inline constexpr std::string_view Relation = "http://vision.semkg.org/onto/Relation";
inline constexpr std::string_view Dataset = "http://vision.semkg.org/onto/Dataset";
inline constexpr std::string_view Model = "http://vision.semkg.org/onto/Model";
inline constexpr std::string_view Evaluation = "http://vision.semkg.org/onto/Evaluation";

}  // namespace vkg::vocab
