//! Brand names used for typosquatting detection in URL analysis.

/// Common service names checked for look-alike (misspelled) domain labels.
pub const DEFAULT_BRANDS: &[&str] = &[
    "paypal",
    "google",
    "amazon",
    "microsoft",
    "apple",
    "netflix",
    "spotify",
    "facebook",
    "instagram",
    "twitter",
    "linkedin",
    "dropbox",
    "adobe",
    "ebay",
    "chase",
    "wellsfargo",
    "citibank",
    "barclays",
    "visa",
    "mastercard",
    "venmo",
    "zelle",
    "coinbase",
    "binance",
    "outlook",
    "gmail",
    "yahoo",
    "hotmail",
    "office",
    "icloud",
    "samsung",
    "verizon",
    "comcast",
    "xfinity",
    "tmobile",
    "fedex",
    "usps",
    "walmart",
    "target",
    "costco",
    "bestbuy",
    "github",
    "slack",
    "zoom",
    "docusign",
    "intuit",
    "steam",
    "discord",
    "whatsapp",
    "telegram",
];
