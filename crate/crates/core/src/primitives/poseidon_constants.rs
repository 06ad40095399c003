// @generated by scripts/gen_poseidon_params.py. Do not edit.
//
// Grain LFSR parameters: prime field, x^5 S-box, 254-bit modulus, 8 full rounds.
// Values are little-endian u64 limbs of the canonical integer.

pub(crate) const FULL_ROUNDS: usize = 8;

pub(crate) const PARTIAL_ROUNDS_T2: usize = 56;

pub(crate) const ROUND_CONSTANTS_T2: [[u64; 4]; 128] = [
    [0x6c7dc0dbd0abd7a7, 0xa71aa177534cdd1b, 0xfe1faaba294cba38, 0x09c46e9ec68e9bd4],
    [0x3c1d83ffa604cb81, 0xc5142b3ae405b834, 0x2a97ed937f3135cf, 0x0c0356530896eec4],
    [0x317ea977cc154a30, 0xa00ea5aabd6268bd, 0x142e51182bb54cf4, 0x1e28a1d935698ad1],
    [0x4cf9e2b12b91251f, 0x0e5757c3e008db96, 0x080965db30e298e4, 0x27af2d831a9d2748],
    [0x79aaf43545b74e03, 0x41291462f214cd08, 0x3a6a3cfe16ae175a, 0x1e6f11ce60fc8f51],
    [0xf719206268d142d3, 0x04462ed14c3613d8, 0x8541819cb681f0be, 0x2a67384d3bbd5e43],
    [0x36408f5d5c9f45d0, 0xb985e381f0251889, 0x1609f8e12fbfecf0, 0x0b66fdf356093a61],
    [0xdaa6852dbdb09e21, 0x0b26c83cc5cebeed, 0x830c61093c2ade37, 0x012ee3ec1e78d470],
    [0x2d108e7b445bb1b9, 0x6cd1c431b099b6bb, 0xfd88f67f8175e3fd, 0x0252ba5f6760bfbd],
    [0xef5aeaad7ca932f1, 0x54391a8935ff71d6, 0x6c6bec3cef542963, 0x179474cceca5ff67],
    [0x7e1a2589bbed2b91, 0x9c1f974a264969b3, 0x9228ff4a503fd4ed, 0x2c24261379a51bfa],
    [0x53e66c0551801b05, 0xc2f63f5001fc0fc5, 0xac2f288bd0695b43, 0x1cc1d7b62692e63e],
    [0x5d9eff5fd9c91b56, 0x00784dbf17fbacd0, 0xb2ed55f852979e96, 0x255059301aada98b],
    [0xb11c29ce7e59efd9, 0xaea24234970a8193, 0x79e1f5c0eccd32b3, 0x28437be3ac1cb2e4],
    [0x338762c37f5f2043, 0x18548da8fb4f78d4, 0x1ca4fa6b53766eb1, 0x28216a442f2e1f71],
    [0x131f2377323482c9, 0xeee1efce03094581, 0x1f39f4e7056dd03f, 0x2c1f47cd17fa5adf],
    [0x646b8566a621afc9, 0xd9dafca276638a63, 0x8632bcc9356ceb7d, 0x07abad02b7a5ebc4],
    [0x37da0c4d15f96c3c, 0x9429f90880a69cd1, 0x275b33ffaab51dfe, 0x0230264601ffdf29],
    [0x717e5d66899aa0a9, 0xa864414557ee289e, 0xa0f168656497ca40, 0x1bc973054e51d905],
    [0x2a6b22288f0a67fc, 0xd249aff5c2d8421f, 0x206c3157e86341ed, 0x2e1c22f964435008],
    [0xa70452bc2bba86b8, 0x9e8ea1598e46c9f7, 0x121c1d5f461bbc50, 0x1224f38df67c5378],
    [0x69d2989186cde20e, 0xd7bfe8cd9dfeda19, 0x9280b4bd9ed0068f, 0x02e4e69d8ba59e51],
    [0x6d47e9735d98018e, 0x4f19ee364e653f07, 0x7f5df81fc04ff3ee, 0x1f1eccc34aaba013],
    [0xeacb8a4d4284f582, 0x1424448032cd1819, 0x74266c3039a9a731, 0x1672ad3d709a3539],
    [0x1d2ed602df8c8fc7, 0xcda6961f284d2499, 0x56f44af5192b4ae9, 0x283e3fdc2c6e420c],
    [0x614fbd69ff394bcc, 0x683751f8fdff59d6, 0xd0db0957170fa013, 0x1c2a3d120c550ecf],
    [0x96cb6b8177653fbd, 0x143a9a43773ea6f2, 0xf7897a7323456efe, 0x216f84877aac6172],
    [0x11a1f51552f94788, 0xceaa47ea61ca59a4, 0x64ba7e8e3e28d12b, 0x2c0d272becf2a757],
    [0xcb4a6c3d89546f43, 0x170a5480abe0508f, 0x484ee7a74c454e9f, 0x16e34299865c0e28],
    [0x48cd939755488fc5, 0x772047765802290f, 0x375a232a6fb9cc71, 0x175ceba599e96f5b],
    [0xd8c5ffbb44a1ee32, 0x6aa410bfbc354f54, 0xfead9e1758b02806, 0x0c7594440dc48c16],
    [0x92479882d919fd8d, 0x760e20013ccf912c, 0xc466db7d7eb6fd8f, 0x1a3c29bc39f21bb5],
    [0x95c8eeabcd22e68f, 0x0855d349074f5a66, 0xc0986ea049b25340, 0x0ccfdd906f3426e5],
    [0xe0e699b67dd9e796, 0x66a7a8a3fd065b3c, 0x2bdb475ce6c94118, 0x14f6bc81d9f186f6],
    [0x88edeb7386b97052, 0xcc099810c9c495c8, 0x9702ca70b2f6c5aa, 0x0962b82789fb3d12],
    [0xafef0c8f6a31a86d, 0x13284ab01ef02575, 0xbf20c79de25127bc, 0x1a880af7074d18b3],
    [0x4c3012bb7ae9311b, 0x20af2924fc20ff3f, 0xcd5e77f0211c154b, 0x10cba18419a6a332],
    [0x756a2849f302f10d, 0xfa27b7319cae3406, 0xbdc76ba63a9eaca8, 0x057e62a9a8f89b3e],
    [0xafa0413b44280cee, 0xb961303bbf65cff5, 0xd44adf5384b4988c, 0x287c971de91dc0ab],
    [0x6f7f7960e306891d, 0x1e562bc46d4aba4e, 0xb3bca9da0cca908f, 0x21df3388af1687bb],
    [0x3eff8b560e1682b3, 0x789df8f70b498fd8, 0x3e25cc974d0934cd, 0x1be5c887d25bce70],
    [0x48d59c2706a0d5c1, 0xd2cb5d42fda5acea, 0x68117175cea2cd0d, 0x268da36f76e568fb],
    [0xbd06460cc26a5ed6, 0xc5d8bb74135ebd05, 0xc609beaf5510ecec, 0x0e17ab091f6eae50],
    [0x040f5caa1f62af40, 0x91ef62d8cf83d270, 0x7aee535ab074a430, 0x04d727e728ffa0a6],
    [0x2b15417d7e39ca6e, 0x33702ac10f1bfd86, 0x81b549762bc022ed, 0x0ddbd7bf9c293415],
    [0x8a29c49c8789654b, 0x34f5b0d1d3af9b58, 0x768162e82989c6c2, 0x2790eb3351621752],
    [0x84b764206142f9e9, 0x395f3d9ab8b2fd09, 0x4471950193d8a570, 0x1e457c601a63b73e],
    [0xc4c686fc46e091b0, 0xfa90ecd0c43ff91f, 0x638d6ab2bbe7135f, 0x21ae64301dca9625],
    [0x5858534eed8d350b, 0x854be9e3432e0955, 0x4da293166f494928, 0x0379f63c8ce3468d],
    [0x8c9f58a324c35049, 0xca0e4921a46686ac, 0x6a744a080809e054, 0x002d56420359d026],
    [0x0fc2c5af963515a6, 0xda8d62459e21f409, 0x1d68b3cd32e10bbe, 0x123158e5965b5d9b],
    [0x60c80eb49cad9ec1, 0x0fbb2b6f52836d4e, 0x661d14bbf6cbe042, 0x0be29fc40847a941],
    [0x233802f24fdf4c1a, 0x36db9d859cad5f9a, 0x57716142015a453c, 0x1ac96991dec2bb05],
    [0x51ca3355bcb0627e, 0x5e12c9fa97f18a92, 0x5f4964fc61d23b3e, 0x1596443f763dbcc2],
    [0xd6d049eae3ba3212, 0xf1857d9f17e715ae, 0x6b2861d4ec3aeae0, 0x12e0bcd3654bdfa7],
    [0x04e6c76c7cf964ba, 0xceabac7f37154b19, 0x9ea73d4af9af2a50, 0x0fc92b4f1bbea82b],
    [0x9c7e965233872762, 0xb14f7c7722236f4f, 0xd6f2e592a8013f40, 0x1f9c0b1610446442],
    [0x8d159f643dbbf4d3, 0x050d914da38b4c05, 0xf8cde06157a782f4, 0x0ebd74244ae72675],
    [0x7a839839dccfc6d1, 0x3b0671e97346ee39, 0x69a9fafd4ab951c0, 0x2cb7f0ed39e16e9f],
    [0x90c72bca7352d9bf, 0xce761d0514ce5266, 0x5605443ee41bab20, 0x1a9d6e2ecff022cc],
    [0x87da182d648ec72f, 0xd0c13326a9a7ba30, 0x5ea83c3bc44a9331, 0x2a115439607f335a],
    [0x9535c115c5a4c060, 0xe738b56305cd44f2, 0x15b8fa7aee3e3410, 0x23f9b6529b5d040d],
    [0x260eb939f0e6e8a7, 0xa3ce97c16d58b68b, 0x249ac6ba484bb9c3, 0x05872c16db0f72a2],
    [0x2b624a7cdeddf6a7, 0x0219b6151d55b5c5, 0xca20fb80118075f4, 0x1300bdee08bb7824],
    [0x072e4e7b7d52b376, 0x8d7ad29916d98cb1, 0xe63817863a8f6c28, 0x19b9b63d2f108e17],
    [0x24a20128481b4f7f, 0x13d1c88726b5ec42, 0xb5bda237668522f6, 0x015bee1357e3c015],
    [0xea92c785b128ffd1, 0xfe1e1ce4bab218cb, 0x1b9707a4f1615e4e, 0x2953736e94bb6b9f],
    [0x4ce7266ed6608dfc, 0x851b98d372b45f54, 0x862f806180c0385f, 0x0b069353ba091618],
    [0x4f588ac97d81f429, 0x55aeb7eb9306b64e, 0x15e4e0bcfb93817e, 0x304f74d461ccc131],
    [0xb8ee5415cde913fc, 0xaad2a164a4617a4c, 0xe8a33f5e77dfe4f5, 0x15bbf146ce9bca09],
    [0xa9ff23859572c8c6, 0x9b8f4b850405c10c, 0x44901031487964ed, 0x0ab4dfe0c2742cde],
    [0x251de39f9639779a, 0xef5eedfea546dea9, 0x97f45f7649a19675, 0x0e32db320a044e31],
    [0xa3078efa516da016, 0x6797733a82774896, 0xb27635a78b6888e6, 0x0a1756aa1f378ca4],
    [0x4254d6a2a25d93ef, 0x95e61d328f85efa9, 0x47fd17177f952ef8, 0x044c4a33b10f6934],
    [0xd37b07b5466c4b8b, 0xfe0879d79a496891, 0xbe655b537f66f700, 0x2ed3611b725b8a70],
    [0xd8339ea7120858aa, 0xadfdeb9cfdd347b5, 0xc8ecc3d722aa2e0e, 0x1f9ba4e8bab7ce42],
    [0xb74056f865c5d3da, 0xa38e82ac4502066d, 0x8f7ee907a84e518a, 0x1b233043052e8c28],
    [0xca2f97b020875954, 0x902053bfc0f14db0, 0x74031ab72bd55b4c, 0x2431e1cc164bb8d0],
    [0xa791f273965801fd, 0xa13e322097583319, 0x30cd6953a0a7db45, 0x082f934c91f5aac3],
    [0x9ad6bb930c48997c, 0xc77245e2ae7cbe99, 0xa34be074315542a3, 0x2b9a0a223e7538b0],
    [0xb0b589cc70214e7d, 0x8164163e75a8a00e, 0xceb85483b887a9be, 0x0e1cd91edd2cfa2c],
    [0x88d324601cebe2f9, 0x99774f19854d00f5, 0xc951f61477e36989, 0x2e1eac0f2bfdfd63],
    [0x23d748115b500b83, 0x7345784d8efdb33c, 0x0c76158e769d6d15, 0x0cbfa95f37fb7406],
    [0x980c232dfa4a4f84, 0x76d991e3a77513d9, 0xd65ad49d8a61e9a6, 0x08f05b3be923ed44],
    [0x25a2dd510c047ef6, 0xe7284925dc0758a3, 0x52bf8e21984d0443, 0x22719e2a070bcd08],
    [0xf41f62b2f26830c0, 0x7bdbf036119982c0, 0xc060f7fcc3a1ab4c, 0x041f596a9ee1cb2b],
    [0x19fcdd0986b10f89, 0x021be1c2d0dc464a, 0x87628eb06f6b1d4c, 0x233fd35de1be520a],
    [0xefcb453c61c9c267, 0xd31e078aa1b4707e, 0x4325e0a423ebc810, 0x0524b46d1aa87a5e],
    [0xcc4486237c515211, 0x4227bb954b0f3199, 0xce47fcac894b8582, 0x2c34f424c81e5716],
    [0xf33010327de4915e, 0x2dd2025b5457cc97, 0x207effc2b5541fb7, 0x0b5f2a4b63387819],
    [0xaefac41fe05c659f, 0xc17435d2f57af6ce, 0xc5b72fe439d2cfd6, 0x22207856082ccc54],
    [0x27854048ce2c8171, 0xcdfb210194caf79f, 0x4e24159b7f8950b5, 0x24d57a8bf5da63fe],
    [0x73919bb23b79396e, 0x374ad7097bb01a85, 0x3b371d75bd693f98, 0x0afab181fdd5e058],
    [0xf16290d62b1128ee, 0x76c0057194c16c0b, 0x998a52efac7cbd56, 0x2dba9b108f208772],
    [0x5aff13e6bce420b3, 0xcbb83de0bd592b25, 0x56f881c788f53f83, 0x26349b66edb8b16f],
    [0x235288a3e6f137db, 0xd81a56d28ecc193b, 0x685e95f92339753a, 0x25af7ce0e5e10357],
    [0x1f7c0187fe35011f, 0x70eed7aae88b2bff, 0xc094d6a55edd68b9, 0x25b4ce7bd2294390],
    [0x8cb9d54c1e02b631, 0xde9cef28ebdf30b1, 0x387e53f1908a88e5, 0x22c543f10f6c89ec],
    [0xdf668e74882f87a9, 0x425e906a919d7a34, 0x4fc7908a9f191e1e, 0x0236f93e7789c472],
    [0x9cb497af980c4b52, 0x652bdae114eb0165, 0x0e7d27e37d05da99, 0x29350b401166ca01],
    [0xee1260916652363f, 0x65edb75d844ebb89, 0x6bd31bbab547f75a, 0x0eed787d65820d3f],
    [0x1906f656f4de6fad, 0xfdcd0e99bd94297d, 0x036a753f520b3291, 0x07cc1170f13b46f2],
    [0x2059435689e8acea, 0x908786d7f9f5d10c, 0xf49bcf613a3d30b1, 0x22b939233b1d7205],
    [0xadd650ace60ae5a6, 0x740f083a5aa85438, 0x8aad1dc8bc33e870, 0x01451762a0aab81c],
    [0xe704fec0892fce89, 0xe32eaa61dec7da57, 0x61fabf1025d46d1f, 0x23506bb5d8727d44],
    [0x7f8bd68907355522, 0x2a3709531e1efea9, 0xbac06ae3f71bdd09, 0x2e484c44e838aea0],
    [0x45418da26835b54c, 0xaf4a594545cedc25, 0x379e78c50bd2e42b, 0x0f4bc7d07ebafd64],
    [0xe620996d50d8e74e, 0x51582388725df460, 0xfa76637862faaee8, 0x1f4d3c8f6583e9e5],
    [0x53eb9bcb48fe7389, 0xfae02abc7b681d91, 0x2660d07be0e4a988, 0x093514e0c70711f8],
    [0x4a58e0a347e153d8, 0x43ee83ece47228f2, 0x46699a2b5f3bc036, 0x1adab0c8e2b3bad3],
    [0x1a22dbef9e80dad2, 0x378c1b94b8072bac, 0xd14709ebb474641a, 0x1672b1726057d99d],
    [0x30d47b239b479c14, 0xc5d8e2fae0acc4ee, 0x8f44f53fdcab468c, 0x1dfd53d4576af2e3],
    [0xbc7f207753205c60, 0xe6d77d640f6fc3de, 0xa70a36263a37e17f, 0x0c6888a10b75b0f3],
    [0x85091ecca9d1e508, 0x611a61e00ee6848b, 0x92b34a7e77d12fe8, 0x1addb933a65be770],
    [0x7935628e299d1791, 0xf638ff5425f0afff, 0x5c10ae18d1de933c, 0x00d7540dcd268a84],
    [0xd316939d20b82c0e, 0x26fedde4acd99db1, 0x01b2827a5664ca9c, 0x140c0e42687e9ead],
    [0xc091e2ae56565984, 0xc20a0f9b24f8c5ed, 0x91ba89b8d13d1806, 0x2f0c3a115d4317d1],
    [0xd8c538a1dc958c61, 0x08a0cff670b22b82, 0x3006ed220cf9c810, 0x0c4ee778ff7c1455],
    [0x27c3d7485de74c69, 0x9424ed26c0acc662, 0x3693f00440ccc360, 0x1704f2766d46f82c],
    [0x39b66fe9009c3cfa, 0xf0769c9f8544e402, 0xa7a02c1b51d244ab, 0x2f2d19cc3ea5d78e],
    [0xd6c766a806fc6629, 0xdd7ee6cb9cfed9c7, 0x5053f112e2a8e8dc, 0x1ae03853b75fcaba],
    [0x4e41a86ddaf056d5, 0x3556921b2d6f014e, 0x51d131d0fa61aa5f, 0x0971aabf795241df],
    [0x5f5c29f7bfe2f646, 0xda624f8380df1c87, 0x91d4cf6b6e0de73e, 0x1408c316e6014e1a],
    [0x41691f39822ef5bd, 0x6c89f1f773ef2853, 0x248abe42b543093b, 0x1667f3fe2edbe850],
    [0x424c69576500fe37, 0x5b81718409e5c133, 0xa48b0a03557cdf91, 0x13bf7c5d0d2c4376],
    [0x19bc0ba743a62c2c, 0x024b95347856b797, 0x3016adf3d3533c24, 0x07620a6dfb0b6cec],
    [0x1675de3e1982b4d0, 0x75d2959e2f322b73, 0x36a8ca08bdbdd8b0, 0x1574c7ef0c43545f],
    [0xc06e03a7ff8378f0, 0x5bd4184571c254fd, 0xfd567970a717ceec, 0x269e4b5b7a2eb21a],
];

pub(crate) const MDS_T2: [[[u64; 4]; 2]; 2] = [
    [
        [0xbceca70bd2af7ad5, 0xaf07f38af8c952a7, 0xec10345351a23a3a, 0x066f6f85d6f68a85],
        [0x05462b9f8125b1e8, 0x20a7c02bbd8bea73, 0x7782e1509b1d0fdb, 0x2b9d4b4110c9ae99],
    ],
    [
        [0xf573f431221f8ff9, 0xb6c09d557013fff1, 0x2bf67a4493cc262f, 0x0cc57cdbb08507d6],
        [0x21bcd147943203c8, 0xade857e86eb5c3a1, 0xa31a6ed69724e1ad, 0x1274e649a32ed355],
    ],
];

pub(crate) const PARTIAL_ROUNDS_T3: usize = 57;

pub(crate) const ROUND_CONSTANTS_T3: [[u64; 4]; 195] = [
    [0x8d21d47304cd8e6e, 0x14c4993c11bb2993, 0xd05986d656f40c21, 0x0ee9a592ba9a9518],
    [0x5696fff40956e864, 0x887b08d4d00868df, 0x5986587169fc1bcd, 0x00f1445235f2148c],
    [0xe879f3890ecf73f5, 0x30c728730b7ab36c, 0x1f29a058d0fa80b9, 0x08dff3487e8ac99e],
    [0x20966310fadc01d0, 0x56c35342c84bda6e, 0xc3ce28f7532b13c8, 0x2f27be690fdaee46],
    [0x8b8327bebca16cf2, 0xb763fe04b8043ee4, 0x2416bebf3d4f6234, 0x2b2ae1acf68b7b8d],
    [0xe64b44c7dbf11cfa, 0x5952c175ab6b03ea, 0xcca5eac06f97d4d5, 0x0319d062072bef7e],
    [0x8ef7b387bf28526d, 0xc8b7bf27ad49c629, 0x8a376df87af4a63b, 0x28813dcaebaeaa82],
    [0x150928adddf9cb78, 0x2033865200c352bc, 0xf181bf38e1c1d40d, 0x2727673b2ccbc903],
    [0xb8fb9e31e65cc632, 0x6efbd43e340587d6, 0xe74abd2b2a1494cd, 0x234ec45ca27727c2],
    [0xcd99ff6e8797d428, 0xab10a8150a337b1c, 0x7f862cb2cf7cf760, 0x15b52534031ae18f],
    [0xd701d4eecf68d1f6, 0x8e0e8a8d1b58b132, 0x5ed9a3d186b79ce3, 0x0dc8fad6d9e4b35f],
    [0x97805518a47e4d9c, 0xea4eb378f62e1fec, 0x600f705fad3fb567, 0x1bcd95ffc211fbca],
    [0x17cb978d069de559, 0xc76da36c25789378, 0xe9eff81b016fc34d, 0x10520b0ab721cadf],
    [0xe88a9eb81f5627f6, 0x2932498075fed0ac, 0x9b257d8ed5fbbaf4, 0x1f6d48149b8e7f7d],
    [0xca34bdb5460c8705, 0xfff8dc1c816f0dc9, 0xd29e00ef35a2089b, 0x1d9655f652309014],
    [0x8fe3d4185697cc7d, 0xa731ff67e4703205, 0xb051f7b1cd43a99b, 0x04df5a56ff95bcaf],
    [0xf6ec282b6e4be828, 0x8690a10a8c8424a7, 0x151b3d290cedaf14, 0x0672d995f8fff640],
    [0x9fc1d8209b5c75b9, 0x0c9a9dcc06f2708e, 0xb21200d7ffafdd5f, 0x099952b414884454],
    [0x83fd0e843a6b9fa6, 0x48e43586a9b4cd91, 0x7c483143ba8d4694, 0x052cba2255dfd00c],
    [0x16077cb93c464ddc, 0x82de55707251ad77, 0xb0bd74712b7999af, 0x0b8badee690adb8e],
    [0xb963d0a8e4b2bdd1, 0x49c15d60683a8050, 0x5a1ee651020c07c7, 0x119b1590f13307af],
    [0xce15be0bfb4a8d09, 0x2c4acfc884ef4ee5, 0x2529d36be0f67b83, 0x03150b7cd6d5d17b],
    [0xbe69cb317c9ea565, 0x5374efb83d80898a, 0x3cf1951f17391235, 0x2cc6182c5e14546e],
    [0x92d2cd73111bf0f9, 0x4218cadedac14e2b, 0x50cfe129a404b376, 0x005032551e6378c4],
    [0x88f9da2cc28276b5, 0x6469c399fcc069fb, 0xbb147e972ebcb951, 0x233237e3289baa34],
    [0xe80c2d4c24d60280, 0x23037f21b34ae5a4, 0xc980d31674bfbe63, 0x05c8f4f4ebd4a6e3],
    [0xee1f09b2590fc65b, 0x52bcf35ef3aeed91, 0xba05d818a319f252, 0x0a7b1db13042d396],
    [0x5df542365a404ec0, 0xf156e2b086ff47dc, 0xb14296572c9d32db, 0x2a73b71f9b210cf5],
    [0x76a760bb5c50c460, 0xec18f2c4dbe7f229, 0x935107e9ffc91dc3, 0x1ac9b0417abcc9a1],
    [0x9015ee046dc93fc0, 0x269f3e4d6cb10434, 0x3fabb076707ef479, 0x12c0339ae0837482],
    [0x8246682e56e9a28e, 0x52900aa3253baac6, 0x7f5b18db4e1e704f, 0x0b7475b102a165ad],
    [0x32ab3aa88d7f8448, 0x7c843e379366f2ea, 0xdb1c5e49f6e8b891, 0x037c2849e191ca3e],
    [0x45fdb176a716346f, 0xd5206c5c93a07dc1, 0xe92674661e217e9b, 0x05a6811f8556f014],
    [0x7b675ef5f38bd66e, 0x4076e87a7b2883b4, 0x6e947b75d54e9f04, 0x29a795e7d9802894],
    [0x507be199981fd22f, 0x6e8c7382c8a1585c, 0x45a3857afc18f582, 0x20439a0c84b322eb],
    [0x4a2a6f2a0982c887, 0xbb50f27799a84b6d, 0x94ec2050c7371ff1, 0x2e0ba8d94d9ecf4a],
    [0xe6d0ddcca17d71c8, 0x17822cd2109048d2, 0xca38eb7cce822b45, 0x143fd115ce08fb27],
    [0xc84323623be9caf1, 0xf8611659323dbcbf, 0x57968dbbdcf813cd, 0x0c64cbecb1c734b8],
    [0xf1426cef9403da53, 0xe74f348d62c2b670, 0x46fca925c163ff5a, 0x028a305847c683f6],
    [0x24d6755b5db9e30c, 0x6a6bcb64d89427b8, 0x5fa940ab4c4380f2, 0x2e4ef510ff0b6fda],
    [0xb96384f50579400e, 0x8925b4f6d033b078, 0x63d79270c956ce3b, 0x0081c95bc43384e6],
    [0xba8a9f4023a0bb38, 0xe2491b349c039a0b, 0x187e2fade687e05e, 0x2ed5f0c91cbd9749],
    [0x990f01f33a735206, 0x3448a22c76234c8c, 0x4bbf374ed5aae2f0, 0x30509991f88da350],
    [0xa7529094424ec6ad, 0xf0a1119fb2067b41, 0x221b7c4d49a356b9, 0x1c3f20fd55409a53],
    [0x170887b47ddcb96c, 0xc46bb2213e8e131e, 0x049514459b6e18ee, 0x10b4e7f3ab5df003],
    [0x039aa3502e43adef, 0xdd80f804c077d775, 0x3ddd543d891c2abd, 0x2a1982979c3ff7f4],
    [0x5cad0f1315bd5c91, 0xba431ebc396c9af9, 0xfeddbead56d6d55d, 0x1c74ee64f15e1db6],
    [0x9c2fe45a0ae146a0, 0x9e4f2e8b82708cfa, 0xeab9303cace01b4b, 0x07533ec850ba7f98],
    [0x8a11abf3764c0750, 0x285c68f42d42c180, 0xa151e4eeaf17b154, 0x21576b438e500449],
    [0x743d6930836d4a9e, 0xbce8384c815f0906, 0x08ad5ca193d62f10, 0x2f17c0559b8fe796],
    [0xe665b0b1b7e2730e, 0x9775a4201318474a, 0xa79e8aae946170bc, 0x2d477e3862d07708],
    [0xd89be0f5b2747eab, 0xafba2266c38f5abc, 0x90e095577984f291, 0x162f5243967064c3],
    [0x7777a70092393311, 0xd7a8596a87f29f8a, 0x264ecd2c8ae50d1a, 0x2b4cb233ede9ba48],
    [0x4254e7c35e03b07a, 0x6db2eece6d85c4cf, 0x1dbaf8f462285477, 0x2c8fbcb2dd8573dc],
    [0xe5e88db870949da9, 0x9e1b61e9f601e9ad, 0xf2ff453f0cd56b19, 0x1d6f347725e4816a],
    [0x4cd49af5c4565529, 0xf9e6ac02b68d3132, 0xebc2d8b3df5b913d, 0x204b0c397f4ebe71],
    [0x4ff8fb75bc79c502, 0x9ecb827cd7dc2553, 0x4f1149b3c63c3c2f, 0x0c4cb9dc3c4fd817],
    [0x9a616ddc45bc7b54, 0x1e5c49475279e063, 0xa25416474f493030, 0x174ad61a1448c899],
    [0x3a9816d49a38d2ef, 0xeaaa28c177cc0fa1, 0xf759df4ec2f3cde2, 0x1a96177bcf4d8d89],
    [0x8242ace360b8a30a, 0x05202c126a233c1a, 0xd0ef8054bc60c4ff, 0x066d04b24331d71c],
    [0x27037a62aa1bd804, 0x381cc65f72e02ad5, 0x2195782871c6dd3b, 0x2a4c4fc6ec0b0cf5],
    [0xe55afc01219fd649, 0x5e727f8446f6d9d7, 0x47e9f2e14a7cedc9, 0x13ab2d136ccf37d4],
    [0x4c2e3e869acc6a9a, 0xc1b04fcec26f5519, 0x19d24d843dc82769, 0x1121552fca260616],
    [0x09a5546c7c97cff1, 0xa6cd267d595c4a89, 0x889bc81715c37d77, 0x00ef653322b13d6c],
    [0x845aca35d8a397d3, 0x400c776d652595d9, 0x8b261d8ba74051e6, 0x0e25483e45a66520],
    [0x46448db979eeba89, 0x395ac3d4dde92d8c, 0x245264659e15d88e, 0x29f536dcb9dd7682],
    [0x0e456baace0fa5be, 0x5a124e2780bbea17, 0xdfda33575dbdbd88, 0x2a56ef9f2c53feba],
    [0xee416240a8cb9af1, 0xf2ae2999a46762e8, 0xecfb7a2d17b5c409, 0x1c8361c78eb5cf5d],
    [0xd3d0ab4be74319c5, 0x83e8e68a764507bf, 0xc0473089aaf0206b, 0x151aff5f38b20a0f],
    [0xe76e47615b51f100, 0xa9f52fc8c8b6cdd1, 0xc1b239c88f7f9d43, 0x04c6187e41ed881d],
    [0x9e801b7ddc9c2967, 0x4b81c61ed1577644, 0x10d84331f6fb6d53, 0x13b37bd80f4d27fb],
    [0x9321ceb1c4e8a8e4, 0x2ce3664c2a52032c, 0xf578bfbd32c17b7a, 0x01a5c536273c2d9d],
    [0x832239065b7c3b02, 0x4a9a2c666b9726da, 0x5ad05f5d7acb950b, 0x2ab3561834ca7383],
    [0x9f7ed516a597b646, 0xacaf6af4e95d3bf6, 0x200fe6d686c0d613, 0x1d4d8ec291e720db],
    [0x1514c9c80b65af1d, 0xb925351240a04b71, 0x8f5784fe7919fd2b, 0x041294d2cc484d22],
    [0x042971dd90e81fc6, 0x98f57939d126e392, 0x1c4fa715991f0048, 0x154ac98e01708c61],
    [0x4524563bc6ea4da4, 0x50b3684c88f8b0b0, 0x3eedd84093aef510, 0x0b339d8acca7d4f8],
    [0x81ed95b50839c82e, 0x98f0e71eaff4a7dd, 0x54a4f84cfbab3445, 0x0955e49e6610c942],
    [0x3525401ea0654626, 0xa9a6f41e6f535c6f, 0x26b9e22206f15abc, 0x06746a6156eba544],
    [0xac917c7ff32077fb, 0x38e5790e2bd0a196, 0x496f3820c549c278, 0x0f18f5a0ecd1423c],
    [0x2a738223d6f76e13, 0x4bb563583ede7bc9, 0x8ac59eff5beb261e, 0x04f6eeca1751f730],
    [0xc1768d26fc0b3758, 0x8811eb116fb3e45b, 0xc1a3ec4da3cdce03, 0x2b56973364c4c4f5],
    [0x83feb65d437f29ef, 0x8e1392b385716a5d, 0xdcd76b89804b1bcb, 0x123769dd49d5b054],
    [0x94257b2fb01c63e9, 0xa989f64464711509, 0x88ee52b91169aace, 0x2147b424fc48c80a],
    [0xea54ad897cebe54d, 0x647e6f34ad4243c2, 0x1a6c5505ea332a29, 0x0fdc1f58548b8570],
    [0x944f685cc0a0b1f2, 0xbceff28c5dbbe0c3, 0xdf68abcf0f7786d4, 0x12373a8251fea004],
    [0xdd8a1f35c1a90035, 0xa642756b6af44203, 0xad7ea52ff742c9e8, 0x21e4f4ea5f35f85b],
    [0x8a81934f1bc3b147, 0xb57366492f45e90d, 0xdfb4722224d4c462, 0x16243916d69d2ca3],
    [0xa13a4159cac04ac2, 0xabc21566e1a0453c, 0xf66f9adbc88b4378, 0x1efbe46dd7a578b4],
    [0x3b672cc96a88969a, 0xd468d5525be66f85, 0x8886020e23a7f387, 0x07ea5e8537cf5dd0],
    [0xa9fe16c0b76c00bc, 0x650f19a75e7ce11c, 0xb7b478a30f9a5b63, 0x05a8c4f9968b8aa3],
    [0x2d9d57b72a32e83f, 0x3f7818c701b9c788, 0xfbfe59bd345e8dac, 0x20f057712cc21654],
    [0x9bd90b33eb33db69, 0x6dcd8e88d01d4901, 0x9672f8c67fee3163, 0x04a12ededa9dfd68],
    [0xe49ec9544ccd101a, 0xbd136ce5091a6767, 0xe44f1e5425a51dec, 0x27e88d8c15f37dce],
    [0x176c41ee433de4d1, 0x6e096619a7703223, 0xb8a5c8c5e95a41f6, 0x2feed17b84285ed9],
    [0x6972b8bd53aff2b8, 0x94e5942911312a0d, 0x404241420f729cf3, 0x1ed7cc76edf45c7c],
    [0xdf2874be45466b1a, 0xac6783476144cdca, 0x157ff8c586f5660e, 0x15742e99b9bfa323],
    [0x284f033f27d0c785, 0x77107454c6ec0317, 0xc895fc6887ddf405, 0x1aac285387f65e82],
    [0xec75a96554d67c77, 0x832e2e7a49775f71, 0xf9ddadbdb6057357, 0x25851c3c845d4790],
    [0x0ddccc3d9f146a67, 0x53b7ebba2c552337, 0xce78457db197edf3, 0x15a5821565cc2ec2],
    [0x2f15485f28c71727, 0xdcf64f3604427750, 0x0efa7e31a1db5966, 0x2411d57a4813b998],
    [0x58828b5ef6cb4c9b, 0x47e9a98e12f4cd25, 0x13e335b8c0b6d2e6, 0x002e6f8d6520cd47],
    [0x398834609e0315d2, 0xaf8f0e91e2fe1ed7, 0x97da00b616b0fcd1, 0x2ff7bc8f4380cde9],
    [0xe93be4febb0d3cbe, 0x2e9521f6b7bb68f1, 0x5ee02724471bcd18, 0x00b9831b94852559],
    [0x7d77adbf0c9c3512, 0x1ca408648a4743a8, 0x86913b0e57c04e01, 0x0a2f53768b8ebf6a],
    [0x7f2a290305e1198d, 0x0f599ff7e94be69b, 0x3a479f91ff239e96, 0x00248156142fd037],
    [0x50eb512a2b2bcda9, 0x397196aa6a542c23, 0x28cf8c02ab3f0c9a, 0x171d5620b87bfb13],
    [0x9d1045e4ec34a808, 0x60c952172dd54dd9, 0x70087c7c10d6fad7, 0x170a4f55536f7dc9],
    [0x482eca17e2dbfae1, 0xcc37e38c1cd211ba, 0x2ef3134aea04336e, 0x29aba33f799fe66c],
    [0xb5ba650369e64973, 0xe70d114a03f6a0e8, 0xfdd1bb1945088d47, 0x1e9bc179a4fdd758],
    [0x9c9e1c43bdaf8f09, 0xfeaad869a9c4b44f, 0x58f7f4892dfb0b5a, 0x1dd269799b660fad],
    [0x5d1dd2cb0f24af38, 0x7ccd426fe869c7c9, 0x401181d02e15459e, 0x22cdbc8b70117ad1],
    [0xd5ba93b9c7dacefd, 0xfd3150f52ed94a7c, 0x3a9f57a55c503fce, 0x0ef042e454771c53],
    [0x3b304ffca62e8284, 0x1318e8b08a0359a0, 0xf287f3036037e885, 0x11609e06ad6c8fe2],
    [0x08b08f5b783aa9af, 0xfecd58c076dfe427, 0x9e753eea427c17b7, 0x1166d9e554616dba],
    [0xf855a888357ee466, 0x177fbf4cd2ac0b56, 0x93413026354413db, 0x2de52989431a8595],
    [0x74bf01cf5f71e9ad, 0xf51aee5b17b8e89d, 0x9a6da492f3a8ac1d, 0x3006eb4ffc7a8581],
    [0x62344c8225145086, 0x2993fe8f0a4639f9, 0xfdcf6fff9e3f6f42, 0x2af41fbb61ba8a80],
    [0x81b214bace4827c3, 0x8718ab27889e85e7, 0xe5a6b41a8ebc85db, 0x119e684de476155f],
    [0xcff784b97b3fd800, 0xb51248c23828f047, 0x188bea59ae363537, 0x1835b786e2e8925e],
    [0x6c40e285ab32eeb6, 0xd152bac2a7905c92, 0x4d794996c6433a20, 0x28201a34c594dfa3],
    [0x4a761f88c22cc4e7, 0x864c82eb57118772, 0x94e80fefaf78b000, 0x083efd7a27d17510],
    [0x9e079564f61fd13b, 0x11c16df7774dd851, 0x6158e61ceea27be8, 0x0b6f88a357719952],
    [0x14390e6ee4254f5b, 0x589511ca00d29e10, 0x644f66e1d6471a94, 0x0ec868e6d15e51d9],
    [0x00d937ab84c98591, 0xecd3e74b939cd40d, 0x1ac0c9b3ed2e1142, 0x2af33e3f86677127],
    [0x364ce5e47951f178, 0x34568c547dd6858b, 0xd09b5d961c6ace77, 0x0b520211f904b5e7],
    [0xca228620188a1d40, 0xa0c56ac4270e822c, 0xd8db58f10062a92e, 0x0b2d722d0919a1aa],
    [0xe0061d1ed6e562d4, 0x57b54a9991ca38bb, 0xd980ceb37c2453e9, 0x1f790d4d7f8cf094],
    [0xda92ceb01e504233, 0x0885c16235a2a6a8, 0xaea97cd385f78015, 0x0171eb95dfbf7d1e],
    [0x762305381b168873, 0x790b40defd2c8650, 0x329bf6885da66b9b, 0x0c2d0e3b5fd57549],
    [0x5d3803054407a18d, 0x7cbcafa589e283c3, 0x4e5a8228b4e72b37, 0x1162fb28689c2715],
    [0x1623ef8249711bc0, 0x282c5a92a89e1992, 0x64ad386a91e8310f, 0x2f1459b65dee441b],
    [0xc243f70d1b53cfbb, 0xbc489d46754eb712, 0x996d74367d5cd4c1, 0x1e6ff3216b688c3d],
    [0x76881f9326478875, 0xd741a6f36cdc2a05, 0x681487d27d157802, 0x01ca8be73832b8d0],
    [0x0b9b5de315f9650e, 0x680286080b10cea0, 0x86f976d5bdf223dc, 0x1f7735706ffe9fc5],
    [0x4745ca838285f019, 0x21ac10a3d5f096ef, 0x40a0c2dce041fba9, 0x2522b60f4ea33076],
    [0x8ce16c235572575b, 0x3418cad4f52b6c3f, 0x5255075ddc957f83, 0x23f0bee001b1029d],
    [0x66d9401093082d59, 0x5d142633e9df905f, 0xcaac2d44555ed568, 0x2bc1ae8b8ddbb81f],
    [0x8011fcd6ad72205f, 0x62371273a07b1fc9, 0x7304507b8dba3ed1, 0x0f9406b8296564a3],
    [0xcb126c8cd995f0a8, 0x17e75b174a52ee4a, 0x67b72998de90714e, 0x2360a8eb0cc7defa],
    [0x6dcbbc2767f88948, 0xb4815a5e96df8b00, 0x804c803cbaef255e, 0x15871a5cddead976],
    [0x4f957ccdeefb420f, 0x362f4f54f7237954, 0x0a8652dd2f3b1da0, 0x193a56766998ee9e],
    [0xe4309805e777ae0f, 0x3b2e63c8ad334834, 0x2f9be56ff4fab170, 0x2a394a43934f8698],
    [0xb4166e8876c0d142, 0x892cd11223443ba7, 0x3e8b635dcb345192, 0x1859954cfeb8695f],
    [0x408d3819f4fed32b, 0x2b11bc25d90bbdca, 0x013444dbcb99f190, 0x04e1181763050e58],
    [0x1f5e5552bfd05f23, 0xb10eb82db08b5e8b, 0x40c335ea64de8c5b, 0x0fdb253dee83869d],
    [0xa9d7c5bae9b4f1c0, 0x75f08686f1c08984, 0xaa4efb623adead62, 0x058cbe8a9a5027bd],
    [0xd15228b4cceca59a, 0x23b4b83bef023ab0, 0x497eadb1aeb1f52b, 0x1382edce9971e186],
    [0xe1e6634601d9e8b5, 0x7f61b8eb99f14b77, 0x0819ca51fd11b0be, 0x03464990f045c6ee],
    [0xaa5bc137aeb70a58, 0x6fcab4605db2eb5a, 0xfff33b41f98ff83c, 0x23f7bfc8720dc296],
    [0x19636158bbaf62f2, 0x18c3ffd5e1531a92, 0x7e6e94e7f0e9decf, 0x0a59a158e3eec211],
    [0xf4c23ed0075fd07b, 0xe2c4eba065420af8, 0xb58bf23b312ffd3c, 0x06ec54c80381c052],
    [0x962f0ff9ed1f9d01, 0xb09340f7a7bcb1b4, 0x476b56648e867ec8, 0x118872dc832e0eb5],
    [0x95e1906b520921b1, 0x52e0b0f0e42d7fea, 0x5ad5c7cba7ad59ed, 0x13d69fa127d83416],
    [0xfd8a49f19f10c77b, 0xde143942fb71dc55, 0x70b1c6877a73d21b, 0x169a177f63ea6812],
    [0xfb7e9a5a7450544d, 0x3abeb032b922f66f, 0xef42f287adce40d9, 0x04ef51591c6ead97],
    [0xd5f45ee6dd0f69ec, 0x19ec61805d4f03ce, 0x0ecd7ca703fb2e3b, 0x256e175a1dc07939],
    [0xa002813d3e2ceeb2, 0x75cc360d3205dd2d, 0xe5f2af412ff6004f, 0x30102d28636abd5f],
    [0x1fd31be182fcc792, 0x0443a3fa99bef4a3, 0x1c0714bc73eb1bf4, 0x10998e42dfcd3bbf],
    [0xecad76f879e36860, 0x9f3362eaf4d582ef, 0x25fa7d24b598a1d8, 0x193edd8e9fcf3d76],
    [0xf2664d7aa51f0b5d, 0xd1c7a561ce611425, 0xd0368ce80b7b3347, 0x18168afd34f2d915],
    [0x29e2e95b33ea6111, 0xa328ec77bc33626e, 0x0c017656ebe658b6, 0x29383c01ebd3b6ab],
    [0x00bf573f9010c711, 0x702db6e86fb76ab6, 0xa1f4ae5e7771a64a, 0x10646d2f2603de39],
    [0x64d0242dcb1117fb, 0x2f90c25b40da7b38, 0xf575f1395a55bf13, 0x0beb5e07d1b27145],
    [0xdffbf018d96fa336, 0x30f95bb2e54b59ab, 0xdc0d3ecad62b5c88, 0x16d685252078c133],
    [0xfd672dd62047f01a, 0x0a555bbbec21ddfa, 0x3c74154e0404b4b4, 0x0a6abd1d833938f3],
    [0x70a6f19b34cf1860, 0xb12dffeec4503172, 0x8ea12a4c2dedc8fe, 0x1a679f5d36eb7b5c],
    [0xfbc7592e3f1b93d6, 0x26a423eada4e8f6f, 0x3974d50e0ebfde47, 0x0980fb233bd456c2],
    [0x03ebacb5c312c72b, 0xcece3d5628c92820, 0xbf1810af93a38fc0, 0x161b42232e61b84c],
    [0xd09203db47de1a0b, 0x493f09787f1564e5, 0x950f7d47a60d5e6a, 0x0ada10a90c7f0520],
    [0xb50ddb9af407f451, 0xd3f07a8a2b4e121b, 0x320345a29ac4238e, 0x1a730d372310ba82],
    [0xfbda10ef58e8c556, 0x908377feaba5c4df, 0x817064c369dda7ea, 0x2c8120f268ef054f],
    [0x6e7b8649a4968f70, 0xb930e95313bcb73e, 0xa57c00789c684217, 0x1c7c8824f758753f],
    [0xb47b27fa3fd1cf77, 0xf400ad8b491eb3f7, 0x8e39e4077a74faa0, 0x2cd9ed31f5f8691c],
    [0x854ae23918a22eea, 0xa5e022ac321ca550, 0xcf60d92f57618399, 0x23ff4f9d46813457],
    [0xdff1ea58f180426d, 0xaf5a2c5103529407, 0xceece6405dddd9d0, 0x09945a5d147a4f66],
    [0x8a6dd223ec6fc630, 0x7c7da6eaa29d3f26, 0xb67660c6b771b90f, 0x188d9c528025d4c2],
    [0xe0c0d8ddf4f0f47f, 0xdba7d926d3633595, 0x81f68311431d8734, 0x3050e37996596b7f],
    [0x9d829518d30afd78, 0x6ceae5461e3f95d8, 0x1600ca8102c35c42, 0x15af1169396830a9],
    [0x04284da3320d8acc, 0xdae933e351466b29, 0xa06d9f37f873d985, 0x1da6d09885432ea9],
    [0xe546ee411ddaa9cb, 0x4e4fad3dbe658945, 0xf5f8acf33921124e, 0x2796ea90d269af29],
    [0x7cb0319e01d32d60, 0x1e15612ec8e9304a, 0x0325c8b3307742f0, 0x202d7dd1da0f6b4b],
    [0xa29dace4c0f8be5f, 0xa2d7f9c788f4c831, 0x156a952ba263d672, 0x096d6790d05bb759],
    [0x63798cb1447d25a4, 0x438da23ce5b13e19, 0x83808965275d877b, 0x054efa1f65b0fce2],
    [0x64ccf6e18e4165f1, 0xd8aa690113b2e148, 0xdb3308c29802deb9, 0x1b162f83d917e93e],
    [0xc5ceb745a0506edc, 0xedfefc1466cc568e, 0xfd9f1cdd2a0de39e, 0x21e5241e12564dd6],
    [0x7b4349e10e4bdf08, 0xcb73ab5f87e16192, 0x226a80ee17b36abe, 0x1cfb5662e8cf5ac9],
    [0x29c53f666eb24100, 0x2c99af346220ac01, 0xbae6d8d1ecb373b6, 0x0f21177e302a771b],
    [0xbcef7e1f515c2320, 0xc4236aede6290546, 0xaffb0dd7f71b12be, 0x1671522374606992],
    [0xd419d2a692cad870, 0xbe2ec9e42c5cc8cc, 0x2eb4cf24501bfad9, 0x0fa3ec5b9488259c],
    [0x85e8c57b1ab54bba, 0xd36edce85c648cc0, 0x57cb266c1506080e, 0x193c0e04e0bd2983],
    [0xce14ea2adaba68f8, 0x9f6f7291cd406578, 0x7e9128306dcbc3c9, 0x102adf8ef74735a2],
    [0x40a6d0cb70c3eab1, 0x316aa24bfbdd23ae, 0xe2a54d6f1ad945b1, 0x0fe0af7858e49859],
    [0xe8a5ea7344798d22, 0x2da5f1daa9ebdefd, 0x08536a2220843f4e, 0x216f6717bbc7dedb],
    [0xf88e2e4228325161, 0x3c23b2ac773c6b3e, 0x4a3e694391918a1b, 0x1da55cc900f0d21f],
];

pub(crate) const MDS_T3: [[[u64; 4]; 3]; 3] = [
    [
        [0xfedb68592ba8118b, 0x94be7c11ad24378b, 0xb2b70caf5c36a7b1, 0x109b7f411ba0e4c9],
        [0xd6c64543dc4903e0, 0x9314dc9fdbdeea55, 0x6ae119424fddbcbc, 0x16ed41e13bb9c0c6],
        [0x791a93b74e36736d, 0xf706ab640ceb247b, 0xf617e7dcbfe82e0d, 0x2b90bba00fca0589],
    ],
    [
        [0xd62940bcde0bd771, 0x2cc8fdd1415c3dde, 0xb9c36c764379dbca, 0x2969f27eed31a480],
        [0x29b2311687b1fe23, 0xb89d743c8c7b9640, 0x4c9871c832963dc1, 0x2e2419f9ec02ec39],
        [0xc8aacc55a0f89bfa, 0x148d4e109f5fb065, 0x97315876690f053d, 0x101071f0032379b6],
    ],
    [
        [0x326244ee65a1b1a7, 0xe6cd79e28c5b3753, 0x0d5f9e654638065c, 0x143021ec686a3f33],
        [0xb16cdfabc8ee2911, 0xd057e12e58e7d7b6, 0x82a70eff08a6fd99, 0x176cc029695ad025],
        [0x73279cd71d25d5e0, 0xa644470307043f77, 0x17ba7fee3802593f, 0x19a3fc0a56702bf4],
    ],
];

pub(crate) const PARTIAL_ROUNDS_T4: usize = 56;

pub(crate) const ROUND_CONSTANTS_T4: [[u64; 4]; 256] = [
    [0x8b0878e269ed23e5, 0x02bb86744edc2623, 0x48da1d39bd5e4a43, 0x19b849f69450b068],
    [0xad47f80c8dcf34d6, 0x20eb2cc7450acc1d, 0x7239347b758f0a13, 0x265ddfe127dd51bd],
    [0x3dfc36bab497d8aa, 0x4108ac845015c2aa, 0xe0f66a545e1e5162, 0x199750ec472f1809],
    [0xd032f787c7f1cdf8, 0x4d743ea25067f0ff, 0x110f06a5f74302b1, 0x157ff3fe65ac7208],
    [0xfe18f4896ac94902, 0x0b15c590692f8bee, 0x5fd35ac45fca33f1, 0x2e49c43c4569dd9c],
    [0x2731345ffa2d1f1e, 0xcb2f0b6973c24fa8, 0x0d4aef2b6d6506c3, 0x0e35fb8998189052],
    [0xc6fe723002e0b996, 0xa9d9e7806d667ffe, 0x05f109ae5e944f1b, 0x251ad47cb15c4f11],
    [0x563fa39d9c22df4e, 0xf8beb56fdd05e5f3, 0x9873e97160234641, 0x13da07dc64d42836],
    [0x46e7b89055fd4738, 0xa553939689d350cd, 0x3dc00c7dccef7483, 0x0c009b84e650e6d2],
    [0x203dec74befdca06, 0x04eb650c6d535eb0, 0x01992e3956f42d8b, 0x011f16b1c63a854f],
    [0x85df07093f367549, 0x2f3f78d0467ad454, 0x209d9a561daa7961, 0x0ed69e5e383a688f],
    [0x463672264c9f789b, 0x3aec507f5eb3d33f, 0x21acad41472b6bbe, 0x04dba94a7b0ce9e2],
    [0xce732ff1d4fa28e8, 0x6036757d4bb50bf7, 0x6eb094271c9d237b, 0x0a3f2637d840f3a1],
    [0xe54a485d1182323f, 0x39b1f075569564b6, 0x8f8a1c502fdb38fa, 0x259a666f129eea19],
    [0x7a32fdf7ede0d6a1, 0x7745d4271038e515, 0xd8e7d06a4ee3a47f, 0x28bf7459c9b2f4c6],
    [0xec91bd6941432447, 0xc37c85bbcce6a2ae, 0x26ea200f489be8d4, 0x0a1ca941f0570375],
    [0xb43a26fd926361cf, 0x5535ed1539f051dc, 0x53d7fd4fc5451285, 0x0c6f8f958be0e930],
    [0x84dd57e69caaf811, 0xa9e8a00708e296e0, 0xd426e8128ac9d90a, 0x123106a93cd17578],
    [0x7b074867cd2dee75, 0x5e8fa83ff1e8f187, 0x7dd3ab52f8e84008, 0x26e1ba52ad9285d9],
    [0x4471537e6a4ae2c5, 0xbe4d8b7bf9e09586, 0x18a64c5c47b9c97c, 0x1cb55cad7bd133de],
    [0x7143f08e6e9055d0, 0x2a53043d5060a41c, 0x0e2c7ce04bde7f6d, 0x1dcd73e46acd8f8e],
    [0xb12b9bb4512e5574, 0x0cda294a0eb4e9b9, 0xf5852f05474a4def, 0x011003e32f6d9c66],
    [0xd7c508dd2287ae8c, 0xbadfe5903f58bafe, 0x9ad5f20d03a57dfe, 0x2b1e809ac1d10ab2],
    [0xeaa69ae87bcec0a5, 0xef995d05ab2fc5fa, 0x9fb4dac35ee17ed0, 0x2539de1785b73599],
    [0x43982cb11d77951d, 0xf4e1c3d41c86d46e, 0x26497f222b3e0a0e, 0x0c246c5a2ef8ee01],
    [0x3f0305f5d03b527b, 0xbb09e6a6ad1a1c2f, 0x5408148f7c0632ed, 0x192089c4974f68e9],
    [0x6d8fdc2fb5a60d85, 0x8529097d91096b75, 0x6a0ee36eeb0d0c05, 0x1eae0ad8ab68b2f0],
    [0x9768bd98c5d06bfb, 0xdb6e2fdc0dee99e6, 0xe46f8282872abc88, 0x179190e5d0e22179],
    [0x6cafe794a9b3cd1c, 0x14528f7db00f31bf, 0x76e9a81c7ac4b832, 0x29bb9e2c90767325],
    [0xb10e590e6e691e08, 0x52652645882aac35, 0x403efd0c2464a90d, 0x225d394e42207599],
    [0xe09efd454b23fd59, 0x2be13557451c087d, 0x753d238055b44453, 0x064760623c25c8cf],
    [0x922910a78f6b5b87, 0x4d67f4bf42a75c10, 0x7f301c4b716d8a39, 0x10ba3a0e01df92e8],
    [0x361b77693f21471c, 0xcb511bc0c242eb9d, 0x4f9c6e96b0c2a801, 0x0e070bf53f8451b2],
    [0xa7f921014de252fb, 0xccd6cb11d2491d8a, 0xd39755ff93821a73, 0x1b94cd61b051b04d],
    [0x0487b5aa7d74070b, 0x9d4e917d5713bb05, 0xe148787a2e70230f, 0x1d7cb39bafb8c744],
    [0xbb74ac1f303b17db, 0x8785c2961829f701, 0x9117d0fe980c80ff, 0x2ec93189bd1ab4f6],
    [0x82ea46bd83517926, 0xeac404a19ae07a90, 0xa692bb825b86275b, 0x2db366bfdd36d277],
    [0xdc99cec6960711b8, 0x985275428450359a, 0x69655cf186a68532, 0x062100eb485db062],
    [0x00c567bf41f5a59b, 0x20243f92fa59e4f9, 0x570e7f1e8244ca11, 0x0761d33c66614aaa],
    [0xf7a72e494855ad0d, 0x5d78608a0f7de4cc, 0x2c2705aa034e3f31, 0x20fc411a114d1399],
    [0xc3a30f317250bc5a, 0x102c67e8b3effb5f, 0xadd9ec4e9ab219ba, 0x25b5c004a4bdfcb5],
    [0xd87e7dff62b37f4b, 0x038b186d8474155a, 0xa494e58f6df6f5ed, 0x23b1822d278ed632],
    [0x16102a29cc2f69e0, 0x0f14d13bfcfcccaa, 0x606c4ba9012499bf, 0x22734b4c5c3f9493],
    [0x54413d3fad795ce5, 0xe5bdff409aa36102, 0xe27a74dc33492347, 0x26c0c8fe09eb30b7],
    [0xbbd626df348ccad9, 0x196be3083a809829, 0xe88eac03fa1fbb26, 0x070dd0ccb6bd7bba],
    [0x6067c4ebfd4250da, 0xc2c0a6de46d8c5ad, 0xb043ba78bb28c3be, 0x12b6595bdb329b6f],
    [0x5e33d95bb7e8d729, 0xc06fca9b275c671c, 0x3bec30e7a5876c11, 0x248d97d7f76283d6],
    [0x106d15d9bd9baaaa, 0x8b45eb759ddde4aa, 0x16fc6fd64cc93931, 0x1a306d439d463b08],
    [0x0d62d3d6ec7c56cf, 0xf4f1b54ddc27821b, 0xced7c00421cb4621, 0x28a8f8372e3c38da],
    [0xbc852183e1e2ce7e, 0x071ce320c829f388, 0xbb35152f24d43294, 0x0094975717f9a8a8],
    [0xf4103246db2e8d65, 0x593f74d4f653ae83, 0x80fde60d716480d3, 0x04d5ee4c3aa78f7d],
    [0xd08495c12efde187, 0xc7bef54b8822cc76, 0x6349ad6fb8ed2269, 0x2a6cf5e9aa03d433],
    [0xbaae48d7efcba3f3, 0xf792180808fd6e43, 0x9274da43e19ddeb7, 0x2304d31eaab960ba],
    [0xe1c11d39d199f0b0, 0xbff08a7e0726fcb4, 0xd5e7009785817249, 0x03fd9ac865a4b2a6],
    [0x3f7954d4d63b0b64, 0x798afc3a20919307, 0x2248404d55ee5044, 0x00b7258ded52bbda],
    [0x6272c5ca65e92d9a, 0xb13d3a74f3298db3, 0xec38fca2d4bf65eb, 0x159f81ada0771799],
    [0x71e144cf4264431f, 0x9000130ea25f0c54, 0x50237a75bc28e3bb, 0x1ef90e67437fbc85],
    [0x95a79ed82932e30d, 0x8df739bc176b08ec, 0x196b49aa41a2d256, 0x1e65f838515e5ff0],
    [0x6575c1068c94c33f, 0xb18c844e570e1f82, 0xec6ce768d079ba74, 0x2b1b045def3a166c],
    [0xf1c6e07c168bb173, 0x65dc2d73bef715e3, 0x402543b1109229c1, 0x0832e5753ceb0ff6],
    [0xc5a8e3c390b6ad16, 0xb1b841c2e8b6451b, 0x6b762ae0a37d41ba, 0x02f614e9cedfb3dc],
    [0x0f6a0be27e7ed705, 0x7370ebb777bedff4, 0xdd640b8e362cad96, 0x0e2427d38bd46a60],
    [0x0768bbe29214a53a, 0x049f0ec098c3c7c5, 0xeb7c84d414e7ce79, 0x0493630b7c670b6d],
    [0x3dc06cc85327cea9, 0x6bb1515355d5461a, 0x4decdab17066c5a2, 0x22ead100e8e48267],
    [0xe5084e0b6d2a6f16, 0x583f1ae35626d04d, 0xaae2626ed2554d48, 0x25b3e56e655b42cd],
    [0x4b4fdc0a0cf6f9d0, 0xb599c336349e4c58, 0x5837a6cde8ff13db, 0x1e32752ada8836ef],
    [0x72a9864074d412e5, 0x23c00995f05078f6, 0xc50f68f6f3c3455b, 0x2fa2a871c15a387c],
    [0xcd18e7c7a7d83505, 0x54ccbf10661bab7f, 0x278e1db7311e889f, 0x2f569b8a9a4424c9],
    [0x44165374b246b43d, 0xa7df93f7332ffd21, 0x531ade530234c518, 0x044cb455110a8fdd],
    [0x78ddc723a5319025, 0x91fe8c90adfe1181, 0x420246157f2e42b1, 0x227808de93906d5d],
    [0x8579d2e7a6800355, 0x5d03781ae090ad4a, 0x623adead87357986, 0x02fcca2934e046bc],
    [0xcbec2e060d8befac, 0xbad3f3c5ab91a8dd, 0x6abccceb344a1d36, 0x0ef915f0ac120b87],
    [0xf3b16ef2b1405d38, 0xab0fb85f6be63b09, 0x77eb757bc6f287f6, 0x1797130f4b7a3e17],
    [0x36c668555decc6e5, 0x8c7f497c20156d4d, 0x3306c85abab59e60, 0x0a76225dc04170ae],
    [0x96174b5326a31a5c, 0xf8fa76d48acb6647, 0xa1e77a7b93209af6, 0x1fffb9ec1992d66b],
    [0x0611889b797b9c5f, 0x5f8fbba6c6b9c609, 0x53b57c338fa538d8, 0x25721c4fc15a3f28],
    [0xeb63b982bfcaf75a, 0xadb4c3790705da95, 0x215e3d07ba197216, 0x0c817fd42d5f7a41],
    [0x2bc15866e52b5a96, 0xdf8cf86ce00a2200, 0x9f7e13c2c24970b6, 0x13abe3f5239915d3],
    [0x92cd60acb4d391ce, 0x5c1bc3dc29bdbd7a, 0x12ef7f39987a46c8, 0x2106feea546224ea],
    [0x57e1b3345bb0f959, 0xf1ca5a28c748bc71, 0xaaa79474a37dab49, 0x21ca859468a746b6],
    [0x8f1a48999e34185b, 0x2911d14d0321662a, 0x5cf1f0df934194c6, 0x05ccd6255c1e6f0c],
    [0xea28678cb09490a4, 0x16c4fb267fe44fe6, 0xe464d846674c4c88, 0x0f0e34a64b70a626],
    [0x8f5b1a8a2de0d4bf, 0x47dbfcfe350d6483, 0x6157794ca36d0e96, 0x0558531a4e25470c],
    [0xb72f5864961f1455, 0x924cadad3f655a60, 0xceea125157683d18, 0x09d3dca9173ed2fa],
    [0x17d4c722e5bd4335, 0xf23f92d68aaec486, 0x493f866ed03d218b, 0x0328cbd54e8c0913],
    [0xee3347dd5329d34b, 0xe79e7bcc9798c648, 0x23a487b1a7094e07, 0x2bf07216e2aff0a2],
    [0x111e11a63fe412df, 0xd6f78ed6a6dffc82, 0x6499c583cb76c316, 0x1daf345a58006b73],
    [0x391e6f2293d2c404, 0x1ef39039b2edc7ff, 0x46b694c60e182361, 0x176563472456aaa7],
    [0xfb0225035bd3f8db, 0xca964d2b7d1083d4, 0xa3bb5e47d7e33538, 0x2ef1e0fad9f08e87],
    [0x1779ed36c817ae2a, 0x9c1803dec5ae8f0a, 0x17b2b1f57c731017, 0x226c9b1af95babcf],
    [0x35734eb5d4ad0def, 0xf8148c89f13fb35d, 0x28126b4c3a15ae0f, 0x14bce3549cc3db74],
    [0xe550cfd4034212c7, 0xb8e923d301f372f8, 0x742c3373f2635b48, 0x2debff156e276bb5],
    [0xd7d0432d1d4760c7, 0x41afe1b6b29c47ad, 0xfc2395b22e356b64, 0x2d4083cf5a87f5b6],
    [0x9c317c53d7161c29, 0x91bf79a10c0184d8, 0x34b911262fdc9c1b, 0x0c225b7bcd04bf9c],
    [0x7b835265f9c9c8f3, 0x99aa0200db66d5aa, 0xc33a79bfac91a02c, 0x03152169d4f3d06e],
    [0x7afe8b7aa7d3199c, 0xddc8f51bfdfebbb8, 0xb05974587486d58b, 0x0b61811a9210be78],
    [0x046d637a533b6f78, 0xb8ae48acf7048f16, 0xf7eba6a5c5921878, 0x203e000cad298daa],
    [0x0757143d1bfa9146, 0xba7ee386fda1112c, 0x376672b69f6c9655, 0x1a44bf0937c722d1],
    [0x002f59c5611d4daa, 0xb8e0fde75a2106d7, 0x3500afec1a1f56ac, 0x0376b4fae08cb03d],
    [0x3d553ef363182185, 0xd6fc241d3214177f, 0x65a2171250fdfc32, 0x00780af2ca1cad64],
    [0xe9d857079bdc31d5, 0xb75dbe18d5221c87, 0xeb808bedfd72a8d9, 0x10774d9ab80c25bd],
    [0xb56821fd19d3b6e8, 0x0d03f98929ca1d7f, 0x04b1e03b4bd9490c, 0x10dc6e9c006ea38b],
    [0x70067d00141cac16, 0xb21f75bb60e35961, 0xb2c7645a50392798, 0x00544b8338791518],
    [0x13bc534433ee428c, 0x52e105a3b8fa8526, 0x2e2e82eb122789e3, 0x222c01175718386f],
    [0x151a1430f608e3c5, 0xb77f7bdb7f7e2b46, 0x59cfb8811b1e0f45, 0x2840d045e9bc22b2],
    [0x508e01fa5860186b, 0x04554574c2990196, 0x009c937e468c335b, 0x062752f86eebe11a],
    [0x55a8e83eaaf04746, 0x1c9950c12a80bc0a, 0x87adb87c20a478a7, 0x06041bdac48205ac],
    [0x2b1dcbbf51f5000d, 0x2c7a2ae092f308d8, 0xff900a368949b002, 0x04a533f236c422d1],
    [0x4bde50a2b2d05b2a, 0xfe066d1e7dc33df0, 0x11d6a955b3d4f25d, 0x13e31d7a67232fd8],
    [0x2f79905bb13920f1, 0x9279d1648ff2c95d, 0xfbc13d6357e8599a, 0x011c2683ae91eb4d],
    [0xa1ecaed015aaf6ae, 0xd56c928e3e2c2bd0, 0x25b1a270e0b4cba5, 0x0b0d219346b85745],
    [0xd84c7a726b5f1364, 0xb65080781ef9fd13, 0x70291ee638690209, 0x14abdec8db9c6dc9],
    [0x988d0376610be106, 0x01eb12202ef47ced, 0xfcd32aa3d2664788, 0x1a0b70b4b26fdc28],
    [0x2704882e7278b607, 0x6401deb2ef99c4d1, 0x7b6943f9804e7fe5, 0x278543721f96d130],
    [0xa36535e011d58259, 0x3f0738a325638d8b, 0x57866214dbd1473f, 0x16eb59494a9776cf],
    [0x41c3479dcf8c644a, 0x9a9e53eeab6b7f8c, 0x4f240088fa5524c6, 0x2567a658a81ffb44],
    [0xb882ade840bb13d8, 0xab78e0215a5715a6, 0xa7ab39f1abd9cf77, 0x29aa1d7c151e9ad0],
    [0xe206b91f99f2c984, 0x6a4f017f9a85388c, 0xd4bbfce2b3641500, 0x15c091233e60efe0],
    [0xeb679a8115f014cf, 0xe7673ad5f1915f9f, 0x0882c2c999558d77, 0x16bd7d22ff858e5e],
    [0xffe6769250042025, 0xc0182d9b668b8e08, 0xb2c2e13ed6ef4074, 0x02db50480a07be0e],
    [0x13ba866343b73119, 0x86330ef2bf7adb4c, 0x7b6806ec9d6cdba1, 0x05e4a220e6a3bc9f],
    [0x104d37f1cbcf7a42, 0xb5f70bc424d39fa4, 0x98cbf2a5ee3b50e8, 0x1dda05ebc30170bc],
    [0xcd301f22b0de8990, 0x91da214414d89ba5, 0xf645b6fee3667f3c, 0x0184bef721888187],
    [0xad1a6d64341b78ec, 0x37414b84494e1577, 0x5f5e8276f62aef1c, 0x1498a307e6890006],
    [0xfe33548ad46bd49d, 0xcef737b8fab1f864, 0xf4939800b9d2c3ea, 0x25f40f82b31dacc4],
    [0xcb1ff31ce5bb9650, 0xe83056ce4907bfbb, 0x3f6f5862a30d2ea9, 0x09d317cc67025194],
    [0x29b913b6cf3149d0, 0xa41132cd467a86ab, 0x3ba4ce4a4c1b3bd0, 0x2f77d77786d979b2],
    [0x52f89e785f729bbf, 0x1bbd336963f254c1, 0x73dc266b6fccc684, 0x0f53dafd535a9f44],
    [0xde96de85deef2fa2, 0x0e6976e1c00baf16, 0x65c3a099e17526fa, 0x25c1fd72e2230452],
    [0x893e65d6ce4a8f62, 0x41af95c84eaea3cf, 0xe368d385d52d16be, 0x2a902c8980c17faa],
    [0x5527405762f83529, 0x6676dd114d1dc8d2, 0x02878c8976b82be9, 0x1ce1580a3452ecf3],
    [0x2fc50f7f0f4d0056, 0x01c5ec569609034d, 0xa49a1fa306df0088, 0x24a6073f91addc33],
    [0x7f256c68b0be2b74, 0x83e07ca554b5d157, 0x9fc27fe306d71d45, 0x25e52dbd6124530d],
    [0x6796e5b6cd70f15d, 0x5974be4d0a7b2994, 0x93468dbccfb02985, 0x23dffae3c423fa7a],
    [0x99591bc9924ed6f5, 0x80615d50be36243a, 0x49b77594f6b027c4, 0x06342da370cc0d8c],
    [0xcc7df0d8e9f63925, 0x4778303d0405c1b4, 0xb75f09f115fc751b, 0x2754114281286546],
    [0xb59ee197f8187cf5, 0xabf214153833d7bd, 0x862c2bc1d119edde, 0x15c19e8534c5c1a8],
    [0x79b4b3d2d77d5f3e, 0x366f3be0a8210616, 0xb4c78d0d9ef3cabe, 0x265fe062766d08fa],
    [0x8debfd098d3ec7be, 0xd377ac5cd0146f04, 0xf22cb7cd0ac3a327, 0x13ccf689d67a3ec9],
    [0x9fbccca4524aaebd, 0xd92a5e05bdf3fe6b, 0xf81cd3974827a887, 0x17662f7456789739],
    [0xe809fd624be7ad5d, 0x82ca6a5cca70cee4, 0xef18631e515f7f2f, 0x21b29c76329b31c8],
    [0x939eb17b01fa975c, 0x9c06738165215319, 0x441eb97fe2790198, 0x18137478382aadba],
    [0x39ceec4668f37e88, 0xd34f761935ffd3b7, 0xdc724f5fef2b37c2, 0x2bc07ea2bfad68e8],
    [0x0e602077aef9a03e, 0xb4173203c2bd94ad, 0x563840480df993fe, 0x2ddb2e376f54d64a],
    [0x8adb25373596c3f7, 0xe8a20f8d72f61370, 0x06b41cb24c602609, 0x277eb50f2baa7061],
    [0xbb7f87734c9a1fe5, 0xb33fc4b450c0db50, 0x9d0c620904f01a56, 0x0d4de47e1aba3426],
    [0xae908d0279a29f0c, 0x9f445697058f134a, 0x428673b6bd3eea6f, 0x0b8442bfe9e4a1b4],
    [0x74247fddb720f8f5, 0x26e186a65945e965, 0x6e06930cb89f7d4a, 0x11fe5b18fbbea1a8],
    [0x170e4ad89c33a0d6, 0xdf5b774dcad4d883, 0x4d25d8f6d9f90021, 0x224026f6dfaf71e2],
    [0x1bc9f9c62bbeb824, 0xa96bc9e37d1091f6, 0xe0704dad58d03465, 0x0b2ca6a999fe6887],
    [0xa1a7e0c96529f421, 0x1d0a4ce41d364797, 0xd40c54053a28a06b, 0x221b63d66f0b45f9],
    [0xdce2f4836bb84ad4, 0x7493bce64d4d24ae, 0x3d4120801b047d08, 0x30185c48b7b2f1d5],
    [0xf8267318632a61f0, 0x533356f0faa48f27, 0xa989e223056227d3, 0x23f5d372a3f0e3cb],
    [0x8e6dfbe4328f3e3b, 0x88e1e0090d06162e, 0x1bf8235ea162b1f3, 0x2716683b32c755fd],
    [0xc930c69748d5d4bc, 0x3d140770c80ac67d, 0x04ca1d853ec0909e, 0x0977545836866fa2],
    [0xe81c43c0f9434b31, 0x5f51682d31472b05, 0x025d91ab4982dd42, 0x1444e8f592bdbfd8],
    [0xa00f874e7718fbe3, 0xbe3ffbfe583f7012, 0xbeb74a1c5cb8fee8, 0x26e04b65e9ca8270],
    [0xdf69816fb1a914d2, 0x00f48f4febe29ad6, 0x34ee47a5cd9f8698, 0x22a5c2fa860d11fe],
    [0x9f7474dd44c5c8d7, 0x7ec338f3a0964c62, 0x6afd672a738f4273, 0x174b54d9907d8f5c],
    [0xd56c871907b39b87, 0x8d2189b87c8c8143, 0x1168fa66694cf280, 0x1db1db8aa45283f3],
    [0x387341d813d1bfd1, 0x6f65faf8cce0ab66, 0x9030b8c7b7dfde12, 0x1530bf0f46527e88],
    [0x89330a2f2bade457, 0x36ead9edc8f28148, 0x9f01c1cec8760e99, 0x0b73f613993229f5],
    [0x7bd2dc0f36bcf41e, 0x587ab977fc822778, 0x4552aaea377f448d, 0x29c25a22fe216460],
    [0x77df57d77c875526, 0x7abe82795dc272b3, 0x8503da66c92cf407, 0x2b30d53ed1759bfb],
    [0xcf5f0a2916787cd2, 0x756c08c85ede7227, 0x7b7b7e69359d53a2, 0x12f6d703b5702aab],
    [0x1ffa9ac706364113, 0x55ad01071028d484, 0x61a40a0b8837293a, 0x2520e18300afda3f],
    [0xc68f09fa03b8b95f, 0xac9bc59278277393, 0xdda8ed4f346fa967, 0x1ec9daea860971ec],
    [0x08aae24b830ad725, 0x83bf5cbf70ed407c, 0x432f5cd5bef8fe44, 0x0a99b3e178db2e2e],
    [0x317abad7c5778492, 0x07ee0abac3c817a1, 0x086b89b601c2bbe4, 0x07cda9e63db6e39f],
    [0x5d48aab38f8fc3a3, 0x49bd8290963203b3, 0x52d571b191bb0adb, 0x08c9c65a4f955e89],
    [0x3801c9c17bdd9c9e, 0x9af54a2a3f2719d3, 0x49590ddbfbd709ed, 0x2737f8ce1d5a67b3],
    [0xa9f179ba627f7d6a, 0x909432bd0c129813, 0xd28770072798e8b7, 0x1049a6c65ff019f0],
    [0x60a5122361daeddb, 0xde8868944fdf64ee, 0xc0ea5a9beb27cecb, 0x18b4fe968732c462],
    [0xa4f7473483885d19, 0xa6f478cfcf11f1b2, 0x440b2eaeeefa8c02, 0x2ff2b6fd22df49d2],
    [0x8a1b352f5cef42ff, 0xe8be4057cbd8dbd1, 0xe56c789b8f6bbcb3, 0x2ec5f2f1928fe932],
    [0x08c1d100378e545e, 0x424a4c6a7794ee3f, 0xe33ad9f75bf3426d, 0x265a5eccd8b92975],
    [0x20517da1dfd4279c, 0x778e656cfcb366bf, 0x9d6242bb5ada0e68, 0x2405eaa4c0bde112],
    [0x76dd98a2dbf60417, 0xfdb51955d8b2d66b, 0x88018004cbbf2bc5, 0x094c97d8c194c42e],
    [0x330c9625c2afe0b8, 0x508b705221e6a686, 0x22b9979a605bf64d, 0x2c30d5f33bb32c5c],
    [0x6aa2fc716fdb6cf5, 0x4886ea583e87299e, 0x25d01cc6dcb1622d, 0x01a75666f6241f68],
    [0xf47bf2e87d382fcb, 0x6d359ab9a66979fc, 0x4d12ac091e87be7c, 0x0a3290e8398113ea],
    [0xecd21bf69aa0cc74, 0xc31219d8fa0dfc75, 0xfeb38461425bb0d8, 0x154ade9ca36e268d],
    [0x13a4b5095d028772, 0x99231ef5dc69d8dc, 0x1b172d79c6f22eee, 0x27aa8d3e25380c0b],
    [0x9d395bbcbd806461, 0x56bbdf485afa1f54, 0x1a8b2e3bca6099d7, 0x2cf4051e6cab4830],
    [0xb0843d7f84b23e71, 0x5131feab8afa5eeb, 0x1d3f517ddff9f201, 0x301e70f729f3c94b],
    [0x17a8d7a4c91f83bc, 0x32dc4cef113ae60d, 0x8b4d9620347ab023, 0x298beb64f812d25d],
    [0xcf11a3f02e46aa95, 0xd1c14a15b221680a, 0x4d03fd291c3c471e, 0x1b362e72a5f847f8],
    [0xbc1d9ba41dc1c737, 0xaa1ef6e78e1e5ebc, 0x75432902999223d5, 0x0dc8a2146110c0b3],
    [0x08afa1eb922ff279, 0xcb21729a72ddc03a, 0x05dc93092cb69778, 0x0a48663b34ce5e1c],
    [0x545bb314881098ee, 0x0fe46f143b702d74, 0x6096b64a82f9e95f, 0x0a87391fb1cd8cdf],
    [0x82ba8a2a0892fd5d, 0x8826edd7ea9c29f3, 0xf0512ff8e6ca362f, 0x1b5b2946f7c28975],
    [0xb4eac1f533315b6b, 0x173a8bbcb8a5b987, 0x47ebe2239219bc6a, 0x01001cf512ac241d],
    [0xc72beb17d8358a32, 0x7ac093d3fb5f5feb, 0xf704fa7d7693da72, 0x2fd977c70f645db4],
    [0x9be763a97793a9c4, 0x761d5355c05444d9, 0xc2d7cc688164f39e, 0x23c0039a3fab4ad3],
    [0x9f27f22ff03fa25d, 0xaec356cf435888e7, 0x2c9c0df6161eaac1, 0x19d43ee0c6081c05],
    [0x919f9d5ca1cefe59, 0x8bf29b646d020830, 0xfddccffd94a56302, 0x2d9b10c2f2e7ac1a],
    [0xdae2f2b9f83e4267, 0x2799283e166fc81c, 0xc47e4aff5a66f5ce, 0x2457ca6c2f2aa30e],
    [0x044dfb54a7c10b35, 0x811ee8676ed6f0c3, 0x5820592445094022, 0x0abc392fe85eda85],
    [0x1d2c2bc30eac1eb0, 0x1161ac3993acf310, 0x0cebcd37f3ea54f3, 0x19d2cc5ca549d1d4],
    [0xa3d3ab546e98c9c8, 0x3ee0e4ec041ba644, 0x08aafb26ae13cd39, 0x0f97ae3033ffa016],
    [0x8a166496e88cfeca, 0xfa15537ea4e168e8, 0x260e404cf1d427a7, 0x16dbc78fd28b7fb8],
    [0x1827820366d5e07b, 0xef8344e576f8ad3d, 0x16f085f73bc4f22e, 0x240faf28f11499b9],
    [0x46f8cab58d9ef1af, 0xeaba808c8fdb6dbf, 0xfe6c8531e55e1770, 0x0a1bb075aa37ff0c],
    [0xc4a705a7ce089f4d, 0x38d5b085ac1042fd, 0xa6a853aaf3a644ca, 0x2e47e15ea4a47ff1],
    [0x5fb14528375772b6, 0x673ab059935f4df3, 0x860ca4a9c09d39e1, 0x166e5bf073378348],
    [0xed10f96538f0916f, 0x0cacccd027233001, 0xaf235902f057a274, 0x18b42d7ffdd2ea4f],
    [0x21deab1051c37702, 0x4fc368020b3ed382, 0x4914788e3e3c7ead, 0x089cb1b032238f5e],
    [0xd9e70863451dd8d1, 0x89f9339c7b971921, 0xaf7c7076dd165adf, 0x242acd3eb3a2f72b],
    [0x74af860457245c3b, 0xeac9a068283f3264, 0xbf47f2bd82fce896, 0x174fbb104a4ee302],
    [0x780c275fe1116c6b, 0x2891fb2bb318613f, 0x61f3058ce092c67d, 0x17340e71d96f466d],
    [0xa2fd380c4df7f6b2, 0xf098b9f8fd455953, 0xf00f2e383982d024, 0x1e8e40ac853b7d42],
    [0xbf40f92938e2e961, 0x5198c55cad66e8a9, 0xe1d4d5e284b8d107, 0x0529898dc0649907],
    [0xf65f21c4d4e5df8f, 0xe8c77aa017ee1d7b, 0xbf7de5bb797364dc, 0x2162754db0baa030],
    [0x21bef44741752ec6, 0xa9f9291efbde4c84, 0x3ceb250ae00c58c2, 0x12c7553698c4bf6f],
    [0x9cb723136526508e, 0xa733c93353e9d9c7, 0xfcb8c5279313bd51, 0x292643e3ba2026af],
    [0x1db6e74d5b87d158, 0xb6c07c5d98e66ff7, 0x1d52951bea990bd5, 0x00ccf13e0cb6f9d8],
    [0xb0f86c15ab645b4b, 0xb6723873cb30fc22, 0xdd654128cf2f3aaa, 0x185d1e20e23b0917],
    [0x13fe53f8d8764e1f, 0x6778e3de0f024c0f, 0x742bdf11c60efa18, 0x14c61c836d55d3df],
    [0xd03ee1195d72449e, 0x2919e2af53008184, 0xe5dbe4680457691c, 0x0f356841b3f556fc],
    [0x0c0a6b6e8fa5b3e8, 0x83143374fd2080ba, 0x5df124f887bf40b3, 0x1b8fd9ff39714e07],
    [0xe9103418796f6024, 0xfc3c8ae04e9df0b3, 0xa3f873924e2aaa14, 0x0e86a8c2009c140c],
    [0xb0861421e79155c8, 0x373fc43820ca2b16, 0x0e5462ad932fcdd2, 0x2e6c5e898f554777],
    [0x2ce5fd5a0c014604, 0xff9fe1a0ecd37797, 0x7c14f9d1df032bc9, 0x05d797f1ab364723],
    [0xca8929851da8c008, 0x1daf2dcd65519ef5, 0x6c3d152875981d0c, 0x29a3110463a5aae7],
    [0x4b732f8163883314, 0xdc71640a8bbd1f86, 0x73c3a4b91c05354c, 0x2974da7bc0743222],
    [0xcce9c522889b47dc, 0xa29cb91aa082c8bf, 0xb2a30621c05eb12c, 0x1ed0fb06699ba249],
    [0xd80c8ae36e40fe9b, 0xae29e8c572eca912, 0x654ff26d8d863fee, 0x1c793ef0dcc51123],
    [0xfbb4a8770977dc2f, 0x8c91e82589a78169, 0x7956257d3d234ef1, 0x1e6aac1c6d3dd315],
    [0x8fcda33256fb6bf5, 0xd037748080a47d94, 0xe6273dd6fa98b25e, 0x1a20ada7576234ee],
    [0x35d49306728af96c, 0x642d772045ece513, 0xfc7a9a23a6fd9996, 0x191033d6d85ceaa6],
    [0x32ef481f5d06297b, 0xc76f200b3740b8b2, 0x3a825aa6fddc3abf, 0x006e5979da7e7ef5],
    [0x1eff8c0174cdb06d, 0xfbd57f596c8f2983, 0xbef3e68d417e9fa0, 0x0b0d7e69c651910b],
    [0x2c4b20a25c9cdf9d, 0x4ac46dbbb033c511, 0x16435ec084e2ecd4, 0x25caf5b0c1b93bc5],
    [0x085b2f150f72472a, 0xf7f77442d62fd4c8, 0x9af8b796d9645872, 0x12c1ea892cc31e0d],
    [0x1de6dadc78c32aae, 0xe5a929d9f928b9b8, 0xb8bbe3afeb245fee, 0x16af29695157aba9],
    [0x68d31084256b67dc, 0x705b87ec5a4cfdc1, 0xd687fb2f3be18691, 0x0136df457c80588d],
    [0xb95a285060e7b089, 0x9e07b1efbc74434d, 0x6aea984fba6e7147, 0x1639a28c5b4c8116],
    [0x7e232bd9b5ca9b76, 0x816c28b700bdc50f, 0x13f8e650f587ec06, 0x03d62fbf82fd1d43],
    [0x249830de1edfde54, 0xf77a1e40fc6da97c, 0xb4d14aaddca3cfe2, 0x11aeeb527dc8ce44],
    [0x642b645807bfc824, 0x6a670e6bc68c7a49, 0x79c5e6138c6c8ee3, 0x13f9b9a412741294],
    [0x506cae8b7ebcd15b, 0x5ddeeed7a939440c, 0xc8484cd26c7c1f63, 0x0e4772fa3d75179d],
    [0x39fc46a68c5d4db4, 0xb5971752067a612b, 0xde4bdec58febe8d8, 0x1b39a00cbc81e427],
    [0x444d1c0a3a25707e, 0xf66463c2eb54a245, 0x71e16e2953f48731, 0x2bedb66e1ad5a1d5],
    [0x7379ce35da915dec, 0xb08b193b608582a2, 0x8abd068f06a7287f, 0x2cf0a09a55ca93af],
    [0x753c8fb863efb387, 0x7d1a512050ba7db0, 0x88830cabfef2f8d2, 0x2d1bd78fa90e77aa],
    [0x630d7fd283dc3394, 0xf7c0d49c1387062e, 0xf423d3071eb83539, 0x065610c6f4f92491],
    [0x642fb464bd607368, 0xcc5f9969033f15ec, 0x5013b12873452beb, 0x2d933ff19217a554],
    [0x3c49c8aa99e0258b, 0x00dae5354e79508c, 0xf76b92b3e13b30d5, 0x1aa9d3fe4c644910],
    [0x78cea1f1c8450bdd, 0x27095fa773e1aca0, 0xc748638c59111c6b, 0x027ef04869e482b1],
    [0x02e3fa136ad0b8fb, 0x9f67a2605d9ec038, 0x15db4e00668a8c44, 0x2b7d524c5172cbbb],
    [0x3f7c3c1dd735db0f, 0x4693ae25b1e55df1, 0x7c8718d86747c7f7, 0x0c7c382443c6aa78],
    [0xa627dcdd9bd79078, 0x7a1f43c2d30d0fe4, 0x62a7b56acf4f7620, 0x00b4567186bc3f7c],
    [0x0337490883db4fd5, 0xb07fe739e4c1e61d, 0xe6d61737fe08b47f, 0x1e41fc29b825454f],
    [0x002ae8d3ba0653b6, 0x21e1af872d8c0e89, 0x72ee6dafc6165844, 0x12507cd556b7bbcc],
    [0xd77d3e97f71cb5db, 0x97eb36617ef36fe4, 0xcef312e5e6f52a5d, 0x13d437083553006b],
    [0x4686077c6a4486d5, 0x467d90b22f0b3866, 0x687222487dda9a65, 0x163ec73251f85443],
];

pub(crate) const MDS_T4: [[[u64; 4]; 4]; 4] = [
    [
        [0x87947223ae5108ad, 0xe5e39942296127fd, 0x8a351dd786dd7a1d, 0x236d13393ef85cc4],
        [0x3cedc821b2a7ae19, 0x967f1dc58718e59e, 0xc4a9b194e10724eb, 0x277686494f7644bb],
        [0x84a4529e66b09c62, 0x5129c16479973b0a, 0x0b85618826a9b350, 0x023db68784e3f0cc],
        [0x7b3a75646ff382c1, 0x8af08cdbd63017c5, 0xd50d663bae733f97, 0x1d359d245f286c12],
    ],
    [
        [0xf049bc970e841a0c, 0xfe9bc7fb1f70943f, 0xb525be259699ab28, 0x2a75a171563b807d],
        [0x6f38ce4157b6770e, 0x08b4dd3e15ccc370, 0x78e2827d092e1ae8, 0x083abff5e10051f0],
        [0x68a9ff8253a1eb6f, 0x24d5c4741eab8b75, 0x7dc49cfdbae303ad, 0x1a5ad71bbbecd8a9],
        [0x790f725c5d84f0af, 0x945004a7bc2c59e8, 0x86772133640f02ce, 0x0d745fd00dd167fb],
    ],
    [
        [0xf366b3e521c4ed42, 0x497ad2eecbaa7e42, 0x592a52ca9cef820d, 0x2070679e798782ef],
        [0xb3a2be979e2d7eab, 0x06ece318cd224ab6, 0xf800739a53da75d9, 0x2e18c8570d20bf5d],
        [0xfa283c6aa723b608, 0xf2e4386d3e5b9f38, 0x7f3367ce86f684f1, 0x0fa86f0f27e4d3dd],
        [0x3f0c2491e0b403eb, 0x57035ee3da6b2ca8, 0x28168e4b14dbaeb6, 0x03f3e6fab791f166],
    ],
    [
        [0xba8b3d30958e7677, 0x8ff0613fd79375f8, 0x2488540e41f783b6, 0x2f545e578202c973],
        [0x596a15623d01476e, 0xb8104c32ba4cd701, 0xbff7eefeae3faf4b, 0x23810bf82877fc19],
        [0x207ed58d2a34cdd6, 0x1c068ef930f10be2, 0xeeafc4944034cf32, 0x014fcd5eb0be6d5b],
        [0xbb661c25d20fb52a, 0x8ba4a8b627627cc2, 0xd835eae0823e377f, 0x00c15fc3a1d5733d],
    ],
];

pub(crate) const PARTIAL_ROUNDS_T5: usize = 60;

pub(crate) const ROUND_CONSTANTS_T5: [[u64; 4]; 340] = [
    [0x4f3c2bd81a6da891, 0xd889bb4ebd47c386, 0x7f53e29ccac98ed7, 0x0eb544fee2815dda],
    [0xba733f28475128cb, 0xa197aeb12ea64713, 0xf02fdba7dd737fbc, 0x0554d736315b8662],
    [0xf5087c58d5e8c2d4, 0x54907df0c0fb0035, 0xbcd748056307c377, 0x2f83b9df259b2b68],
    [0x1915208f5aba9683, 0x61f15f8b41a75ef3, 0x2447ac83052451b4, 0x2ca70e2e8d7f39a1],
    [0x4ec719cb83ecfea9, 0x994196f12ed22c5d, 0x91b04d7222271c94, 0x1cb5f9319be6a45e],
    [0xb9ea08d18446c122, 0x21c7bb47b93750c2, 0xf8a42192de7ff616, 0x2eb4f99c69f966eb],
    [0xd5f7d099e299520e, 0x0fc7da8b93ee13b6, 0xc5198169e405d9ea, 0x224a28e5a35385a7],
    [0x23796b993bbd82f7, 0x36f33ecbd9a0f978, 0xd8afdd6afca49c30, 0x0f7411b465e600ee],
    [0x0626f9ff5d90e4e3, 0x19b208ae3370f99a, 0xa2be7150392d8d98, 0x0f9d0d5aad2c9555],
    [0x6a12d30702d6fba0, 0x9732b25259cf744b, 0x6f52a59538d32922, 0x1e9a96dc8292bb59],
    [0xc2cd4d528fb3fe3c, 0x3cfe52eab4b945c6, 0x887d578c45555e59, 0x08780514ccd90380],
    [0x59f119d629ccb5fc, 0xced64717e3556d5a, 0xc8149fa3f73ef8c2, 0x272498fced686c7a],
    [0xe3d0ef8a782ef7df, 0x45bd350aff585f10, 0x4b7cb80930bd06eb, 0x01ef8f9dd7c93aac],
    [0x97ea0ae754934d30, 0x8e886e64bf3c40aa, 0x4dc08f222b469b13, 0x045b9f59b6595e61],
    [0xadf2584295d61c66, 0xa3e41e24e247a387, 0x9fd6f59d2a40ff8e, 0x0ac1e91c57d9da91],
    [0xd12e68f04e62d134, 0x0fd67061aee99979, 0xc7f9a421353cd89d, 0x028a1621a94054b0],
    [0xd02aae2a0dcd9dbc, 0x50c19c3fb3c96d09, 0x9632647ed059236e, 0x26b41802c071ea4c],
    [0x4af34384aedb462b, 0x05c9de06758db6a9, 0xbaac2f63e468215e, 0x2fb5dda8072bb72c],
    [0xdd05c56ee894d850, 0xad8ab8ba2a18d383, 0x44ff3547fd823249, 0x2212d3a0f5fccaf2],
    [0x5cd0c7eed465e2e3, 0xa3276fdb19f44c01, 0x58e4dfaeea09be56, 0x1b041ad5b2f06842],
    [0xa91e64afb1500eff, 0x144fb7e3ac14e846, 0x8eccff33e76fded3, 0x0a01776bb22f4b6b],
    [0xf7936440810ace43, 0xa4f33ae8c15cf827, 0xf34d3f275066d549, 0x2b7b5674aaecc3cb],
    [0x4c1b803381a3bdfd, 0x60b042257b78fc00, 0x4cf75779ed54b48c, 0x29d299b80cd4489e],
    [0x19dde30424be401e, 0xa427110032b5e1dd, 0x57641c219d721a74, 0x1c46831d9a745293],
    [0x739ae1d883e91269, 0x36296c0657674f80, 0xf37141dc34d578e0, 0x06d7626c953ccb72],
    [0x0f108c71cda2930c, 0xdc5c440a3022cd96, 0xc54002748e0c410e, 0x28ffddc86f18c136],
    [0xb8ec0619f6fbc5e9, 0xbe67f1b7ed2ab6ad, 0xf85deed09e400b17, 0x2e67f7ee5e4aa295],
    [0xe7abf22c24e80f27, 0xca56859ef759e53c, 0x0e97f25114a79a2d, 0x26ce38fa636c9063],
    [0xafacb4c4cfd35db1, 0x42cb3d16a1f72721, 0x4dd7a01d00a7ffec, 0x2e6e07c3c95bf7c3],
    [0x384b1470da24d8cc, 0x8890d276612e1246, 0x5f91d7961c3a54fb, 0x2aa74f7597f0c9f4],
    [0x2ec0ca639b7f73fe, 0x8a71313c1509183e, 0x2c7c090f668ab45b, 0x287d681a46a2faae],
    [0x11e29f3305e73c04, 0xa5d3106ff565aa3b, 0xf4a40600528f3d7d, 0x212bd19df812eaae],
    [0x3809c28404713504, 0xf97fd9740926dab9, 0x1aafb14b350eb860, 0x1154f7cf519186bf],
    [0xda747e79661fc207, 0xbf5152905be36583, 0x4637810a4bd1b16f, 0x1dff6385cb31f1c2],
    [0x63ea3c606b551e5c, 0x4011a34d54762528, 0xc081d34c44c18e42, 0x0e444582d22b4e76],
    [0xff72d3aab7e4eff8, 0x815773e9c2846323, 0xabab6638328f02f1, 0x0323c9e433ba66c4],
    [0xb70f2c6876a9c29d, 0x25b8cf002740112d, 0x193bba79cdec448f, 0x12746bbd71791059],
    [0xfd049eb4438a2240, 0xd466c837cf50d73e, 0xfd9b9d3751842c75, 0x1173b7d112c2a798],
    [0x5fdb4808703243da, 0xa8e5713b25026ebe, 0x76d1e555d7fed13d, 0x13d51c1090a1ad48],
    [0xf4a58ebeb956baa1, 0xcb72743f0394efe7, 0xff8dcb7cbd2d9743, 0x00874c1344a4ad51],
    [0xa32a562074fef08f, 0x0eea48d3546e97d6, 0x65ce236b07f244fa, 0x22df22131aaab858],
    [0x8bf5eb05a919f155, 0x984524a59101e6c1, 0x8708b437a445fc3e, 0x0bf964d2dbd25b90],
    [0x69b435b5fc502f32, 0x640b9d73a9ab298c, 0xa302be1f7f181e0e, 0x09b18d9b917a55bc],
    [0xd6745a5067289e43, 0xfbbbc70a6365366d, 0xa4bfc1d5bf3dc05b, 0x094f5534444fae36],
    [0x784fddc0dc23f01f, 0xa3e240c0da5701cb, 0x519fa6622af53a15, 0x2999bab1a5f25210],
    [0x69575a11b03a3d23, 0x84301bce8a93d136, 0x1ca94db73710e880, 0x2f6898c07581f637],
    [0x62174b1a6866fccb, 0x565deb1e8e5742f8, 0xec16d7e1318a4740, 0x07268eaaba08bc19],
    [0xa6c9582c41a0529f, 0x62603e078e1c6689, 0x1339ff77113bc9eb, 0x186279b003454db0],
    [0x0768e5524737172c, 0xb67e2cc5de9a2275, 0xe4915bdd04d3e5dd, 0x18a3f736509197d6],
    [0x7b5987b87085671d, 0x725e2d4bcb2d3a00, 0x77cc1e2ed24c808c, 0x0a21fa1988cf38d8],
    [0x0b36a135e785fba2, 0x8328c184a2c43bc0, 0x1faf5ef6a6462522, 0x15b285cbe26c467f],
    [0x8cd28de3e779f161, 0x0b7775b7c902f578, 0x8c08b8c3f9806d56, 0x164b7062c4671cf0],
    [0x7a24f651249baa70, 0x61c61d3d43b6e65d, 0x86d9865fe7e50ef3, 0x0890ba0819ac0a6f],
    [0xcc2ee0aed543e922, 0xa627ac5cb0eb878c, 0xa42712e5a721e4ea, 0x2fbea4d65d7ed425],
    [0x103d7f5f379abaaa, 0x7b70a58e854ab9b9, 0x540303a3b536f85e, 0x0492bf383c36fa55],
    [0x6a969d56292dc24e, 0x1d6185a9ce85675f, 0x4e20251c565142d6, 0x05e91fe944e94410],
    [0x7e380a76e36e6c1c, 0x995b9621e6e49c3b, 0x93d463cb041acad0, 0x12fe5c2029e4b338],
    [0x06cd01dc6fa0784e, 0x1f2629fadc894969, 0x958f772392147413, 0x024154adf0255d47],
    [0x8813c13457a45550, 0xd798815644f2bbde, 0x36ed2462a86bd0ba, 0x18824a09e6afaf4a],
    [0xbb06983e3d5d58a5, 0xdf84a630af68d50b, 0xe9f255de0c3dbddd, 0x0c8b482dba0ad51b],
    [0x441392878fdb05e6, 0x5a4fa67fcd6aaf86, 0x363e0a1667d3b67c, 0x17325fd0ab635871],
    [0x1cc6d0e911fa402e, 0xe550773fa8d18bf7, 0x122f5af67b690f31, 0x050ae95f6d2f1519],
    [0x5771ec84edc50c40, 0x4bbb6295f0756988, 0x038cb288d6263676, 0x0f0d139a0e81e943],
    [0x9dbbca7b8e747cd6, 0x79b39ebc7a1b1c54, 0xf70fd2f2c0f93d1a, 0x1c0f8697795689cd],
    [0xfe536a16dc1d81e6, 0x49be23a4b13598f9, 0x6d2bc2e048bc979e, 0x2bd0f940ad936b79],
    [0x7ce54d1e96ee62cb, 0xa06ebb275e096d16, 0x4778c09a0053337f, 0x27eb1be27c9c4e93],
    [0xf151be62548e2aea, 0x284fbd307d1f71b0, 0x8f96bdd3155a7ca3, 0x2e4889d830a67e5a],
    [0x6064bbe6fcc1e305, 0xc9891f2cadc165db, 0x5d2ec5e9c5bd9983, 0x193fe3db0ab47d3c],
    [0x37cb13027c83e525, 0x6e9661c009679e4e, 0xce415907ad0c40ed, 0x2bf3086e96c36c7b],
    [0x9ff2ea486e59bb28, 0xd5e7e413f741ccf2, 0xa98cdb697c6cad5d, 0x12f16e2de6d4ad46],
    [0xad919b0343b92d2f, 0x33f3d5d6ec6c4bf0, 0xa0262e3653ddd19f, 0x2a72147d230119f3],
    [0x77df79acc10ba974, 0x0a2d9bcc26412e29, 0x6dc47f957806dc5f, 0x21be0e2c4bfd64e5],
    [0x137fd4b6c21b444a, 0x71b84fb911aa57ae, 0x2749a3b54367b25a, 0x0e2d7e1dc946d70b],
    [0x9f3f07d4b92b3e2e, 0xc31adb0eae3325dc, 0x6170a745d8a4188c, 0x2667f7fb5a4fa124],
    [0x830e107da78e3405, 0x1550c12b08dfeb72, 0x30a783b66064697a, 0x2ccc6f431fb74007],
    [0x2ec50621e38e6e5d, 0xae6dbee9e8ca0c24, 0x4f0201462420001f, 0x08888a94fc5a2ca3],
    [0x6acfcd3ccbc53f2a, 0xa0d2fbe753af88b3, 0xad40dd42c9b6fdd7, 0x02977b34eeaa3cb6],
    [0x10b5e9f971e16b9a, 0xbfcfe0d7e6ff8e96, 0xfd6fb6c9ea13a648, 0x120ccce13d28b75c],
    [0xa0bf2af32f86ff3c, 0x92787a4575b2bd73, 0xc81e1b9770ea098c, 0x09fad2269c4a8e93],
    [0xf630cffb60092d6f, 0x0debdb70775eeb8a, 0x0a4b310e4ac6f0fa, 0x026091fd3d4c44d5],
    [0xb904fd2bca893994, 0x2543cc56afad6afc, 0xbb7fba9dfb6fc321, 0x29404aa2ba565b77],
    [0xe7201351b7c883f9, 0xf1ffd86590e0827d, 0xd4e87c2548695b4e, 0x2749475c399aaf39],
    [0xc7557dab65ffa222, 0xa2ebe2dc2e4da70a, 0x39912b50424685cb, 0x098c842322479f72],
    [0x0191d0c053b51936, 0x758ace14c93c4da4, 0x31238e57fead7d5c, 0x18cef581222b647e],
    [0x63b2aa681698de60, 0x3cbc0ca4a108f98d, 0xd4e746745e43711d, 0x13177839c68a5080],
    [0xa907d88e5f0deffd, 0x26cc4df712c0e5f0, 0xc088f56f4b743256, 0x020ca696f531e43e],
    [0x16e028387c7ac022, 0x93d13708c646841d, 0xfa805a30fc548db6, 0x27230eede9cccfc9],
    [0x9057d2fe75bb281c, 0x6497c05969a01543, 0xd64fde34a342a178, 0x01645911c1198b01],
    [0xfdca4a451a5d8643, 0x198971e14487056c, 0x6e439c88341ce25f, 0x2c323fe16481bf49],
    [0x5af88ae6db5085c8, 0xb022c124d3bffe8b, 0x450bd2074c3e22e1, 0x0fc082dfe70728e8],
    [0xfe8a488b423521ee, 0xbe9642116ac4c77e, 0xd8cdca568dcc25b3, 0x2052c174800db209],
    [0x8dd9fd05b3ece9c0, 0x0be351ce8129065a, 0xaf96d621d5542319, 0x28e420e10df2fbb5],
    [0x49d6e0bc3ae5069a, 0x55d6ae1bdacd1cb5, 0x9f783c4462a24db6, 0x25698ca5e24a1b79],
    [0x34d9b857d6984d35, 0xa297b61074422ac1, 0xcf8ffbfa57d51049, 0x160a9981a5c89a57],
    [0x64642b069997f3d4, 0x8b7cebf59ddbb0a0, 0x34d9b694b843f3bf, 0x21c91a39e145c3bc],
    [0xd10975461e41734c, 0xd6eaa029d93f03b6, 0xd2b09345ef112345, 0x1ac8d80dcd5ee876],
    [0xb8dbcea5657ce02c, 0x5d822895e2755544, 0x7c1662a4174c5222, 0x0ab3e6ad0ecf8b8e],
    [0xc5b2237cbdab3377, 0xa52ef3ef5909b4e1, 0x27e3b0b917b3a21c, 0x1c675182512620ae],
    [0x0c8a9092ac2bed45, 0xe37a4a3e07a7d75d, 0x3d948d0c85bad2e2, 0x2cdbc998dfd7affd],
    [0x3e491a133bb63b2e, 0x24337350309dff83, 0x774bf67cc0dee333, 0x23b584a56e2117b0],
    [0x2f3d20de1465e9a5, 0x0d133bc6ba4ec115, 0x8cb73030a3c9d2a1, 0x1e9e2b310f60ba9f],
    [0x60bcd4f1fa5b22db, 0xc9ab5dab987520c4, 0xabc3e720140ae746, 0x0e01e365ba5b3031],
    [0x1387d85bc1264e68, 0x43382011b61c9a4b, 0x7b7127340498d5c4, 0x040884cdcfc64bfc],
    [0xa0a17de311ef9668, 0x353f1724d6067ed0, 0x0c74a3998f2bea36, 0x190b1ee1205eb950],
    [0xfc28d1f832bd3b2c, 0xc1dfcf65ce61e165, 0xd04f52fc23cd9c08, 0x1647c72aec6c4388],
    [0x842e595b71e4541d, 0x9f5494d89fb48b02, 0x799880cc4c873626, 0x2430006346a0145f],
    [0x3221850252b757af, 0x9d853902bb16bacb, 0x365107a3da3ae7f6, 0x177b9a08343917e1],
    [0x39b11d04666df4f8, 0x09cd53d0ae294234, 0x4e58862a68f5e326, 0x04a420e642b11ae9],
    [0xcdfabeddb6a25c8f, 0xde2461858e956ccc, 0x105a88fab0afd810, 0x25d0e0f739fb39fc],
    [0x2c4d4ffa0c740a27, 0x320cb15610eaed45, 0x85905cbf58651edc, 0x04476d91b7eff2fd],
    [0xe9780fd9ca286fae, 0x1c28f6d5e1250cb5, 0x8bc9ca2419eb8dea, 0x1090c0b68b3d7d7b],
    [0xbf2899cb5c6617be, 0x376f2d435855c10e, 0x448a725c5c7cd5ad, 0x25393ce3b9256d50],
    [0x97d144f0fab46630, 0xed824388d6b93426, 0xfc862f306e6e5830, 0x25931c0c7371f4f1],
    [0x03f73f22afbf62f6, 0x8a4d353185d58082, 0xc82aad51b0fb79cf, 0x2396cb501700bbe6],
    [0xb3f0ce03b8724884, 0xa3dc9068c3cca7b5, 0x54ea748a7129a7b0, 0x26a363483348b589],
    [0xa7a0e5b45fcd6897, 0xc99b893334215f6b, 0x8d6f1535b92c5478, 0x27ca107ca204f2a1],
    [0x8d2d02b3b2d91056, 0xac15f7301178581d, 0xe4662bde326b2cce, 0x26da28fc097ed77c],
    [0x72971ba56ee0cb89, 0x655774c1bb35d575, 0x703e3055070ac9cc, 0x056ab351691d8bb3],
    [0x2d729af632376a90, 0xc22547a11ffc5015, 0xc76d109a2f481aa3, 0x2638b57f23b754ae],
    [0xea7bc5519ede7cef, 0xc33e46a532bdec80, 0x32f492c2605184fd, 0x304754bb8c57d607],
    [0x752ac93a9b7619ac, 0x48ec6857fc554010, 0x514f155b5806cbf7, 0x00d1727f8457ee03],
    [0xc588e50947761fa3, 0xb5bca86805ec9419, 0x43ba295a303c72fa, 0x00ee1f3c66fbc05c],
    [0x61f9297eb675d972, 0x10a19fbcfc59078c, 0x4a76b5a1d82415fd, 0x0afafadcf5b4dd4a],
    [0xa8996d124dd04d0a, 0x65a234835a0a6a5e, 0x86ce45e8eed108ee, 0x0b2449f39746085e],
    [0x6a7ddf4823dd5dd6, 0xf6c6f071ec3bdda7, 0xc9f37b0045227095, 0x206b0ce2f1b2c5b7],
    [0x52c7e1029459409c, 0xcaffc3a4ef20fea8, 0xb696e67433628cd6, 0x0feba4fb87834c7c],
    [0x8173e972336e55d3, 0x3b06f1315e6d70e1, 0x8926752e084e0251, 0x254dbfac74c49b0b],
    [0x37719edfa0ca8762, 0x9606c5bd17910aeb, 0x4655168c367559e1, 0x0addb1372cee4e16],
    [0x21a589d68831d759, 0x6ca4d8d81b1ae162, 0xc799024fb019f65c, 0x26b25b7e257f3e97],
    [0x1960b1059e113ba3, 0xa4657b9ab00bdb5b, 0x413b8d4c658787e5, 0x090995b79acec240],
    [0x2974178d44f73b7b, 0xeb0d8e40e99131f4, 0xc57299687843cea3, 0x08dbdc2e21ef11f2],
    [0x58f170939785179f, 0x42fe9c491596ab67, 0x679faf752a0f78e3, 0x09e8aba671481197],
    [0x7bc7c683f1363d5c, 0x7efd12a7f9eec94b, 0x659052a7ebaf816c, 0x1deb05180e833e45],
    [0x35fd6523e5250879, 0x248997e8b2c24af3, 0xa926efbcc04aa9ee, 0x19a70ec6bdfc9098],
    [0xeb93abe10bbf1f64, 0x66353a3777d8a3f1, 0x879986f9aab48905, 0x21d773660adafb8a],
    [0xf6f46617841c3901, 0x97a6b01fcd667347, 0x3e20ba637b89d5d3, 0x09f1890f72e9dc71],
    [0x08c2145c33b111c3, 0x48fa1f897bf219d6, 0x2a300c61e446998d, 0x05af459361eb454d],
    [0xfa12fc850cc8b513, 0x5f336f15f340756c, 0x664a66dc75a65733, 0x0fa1a1d6829f0345],
    [0x53655cf97a628bb0, 0xf4280fcf87f636f8, 0xbda0b1c0307ad543, 0x02e47a35bcc0c3a0],
    [0x36621895204d0f12, 0x2034114601124910, 0xb8f90e78bf4c24b7, 0x14f773e9834c6bde],
    [0xffb091962fc8f7cc, 0x642abe7cfd639992, 0x255cf19d29bc7d8e, 0x102d98cf502ed843],
    [0xcba686a7e91373c2, 0x20d4c73ad3294738, 0x4c47f6c65da7ca23, 0x043dd5f4aa5a76dd],
    [0x4cfdb2b26bd11efa, 0x6f0e7c79743a306f, 0xa6c0d29a48d4f267, 0x21833819c3337194],
    [0xdc53262a3cff2b53, 0xeb4eca246c311eca, 0xb474a6819d116ca3, 0x0f281925cf5ee649],
    [0x93ce662f15c238d6, 0xdf625dd60504d5dc, 0x44709c7746d6824e, 0x0d3e2477a7b10beb],
    [0xacbfc3eff5aefc44, 0xd80f80ab51e73b49, 0x56ff8a01be9cde35, 0x2cd7f641bedbf669],
    [0x86dd861310463cf8, 0x9149d24045811d7a, 0x4d09380f98b74e38, 0x29e95b492bf2f95f],
    [0xf8b3c50df83cc13e, 0x9ae4c51af6ffeb57, 0x266efca86a6c810f, 0x22da66bc62e8f011],
    [0x43072d841925554a, 0x220db79e8129df36, 0x3023491794f4aca3, 0x0fe6d30de7a82d16],
    [0xc7e07ecb298fd67f, 0xd312d03fef1adfec, 0x123c46eff185c23a, 0x0050e842a1299909],
    [0x885cbbdb63108c21, 0x666f9ddf714ed7c5, 0xbe34cc53a42d7733, 0x2130a3a7b3221222],
    [0xe1d328e67b33c9fa, 0xaa66731f34a93280, 0xd8d5883fe0566c24, 0x2df9ee294edf99e3],
    [0xa4b6fc5fc3372762, 0x58132396dc250aeb, 0xf26eb68cc21ff541, 0x1bf7d6e489ad8c0c],
    [0x5d4778d311780e54, 0xcf7b807728bf7fe3, 0x61eaf739617ab136, 0x0c602fa155be9587],
    [0xb63faf0121ed7f21, 0x5154080a24972fae, 0x32407d86b8d22d7d, 0x2e50e2c5b36aa205],
    [0xb459123b180332e1, 0xf674995ee8409b42, 0x5710d6290ec4f782, 0x17c2510982a7b582],
    [0xb2ab255f376b42a8, 0x21337b538eabd2f6, 0x6803ecf2465b885b, 0x0b0d52f03c8af727],
    [0x61972dd8fab8bd14, 0xa9ac77c6c0f85d45, 0x5953d88a63f80647, 0x0f5633df1972b945],
    [0x035498130a7f1572, 0x24780ff43e76e929, 0xe1422e9396811551, 0x0ebf7ad29ca13804],
    [0x661b1103a720ffe2, 0xe18f94bee27c8a57, 0x0b02962173bba343, 0x1aff13c81bda47e8],
    [0x5713be57efac6c07, 0xd3f31de1a3b58ff3, 0xda2465be85505862, 0x210449dbf5cf3061],
    [0xb93ad1c3ee629817, 0x19d1e2f1d3001044, 0x7d75cd6d3c7b9dbe, 0x088230c2794e50c5],
    [0x17a4d6dbb20e7e3a, 0x8cce9a9e16c77056, 0xda08dc464138dfc7, 0x1c408c256490b0a1],
    [0x90dd6f557e9e3903, 0x8f7c77654d584404, 0x22d1771200fb0765, 0x074517e081eb4c1f],
    [0xa05adf61e12fdcbf, 0xcee5530559d6cf0f, 0x88524bdb203691b4, 0x02d04e9c21df1dbd],
    [0xa81db32cf1b67b13, 0xeb9b4650dae9f11a, 0x82e13ebd75de3b58, 0x2eb7a011b8bce910],
    [0xe6030c18f0cf17b5, 0x4d2ac6bf95368304, 0x299f75d6e8a849b5, 0x2efda77ed35f4af0],
    [0xc51b2440192ae064, 0x61a73d10852b8114, 0x2eddbeda65206d4f, 0x09199dcafd50ce64],
    [0x76181cb4216e1562, 0xcb655d8c1797e9fa, 0x4dd319db666a75b5, 0x268c5cfc446d399c],
    [0x012854eda11a18dc, 0x97b44e912cce6687, 0x26b0e9a36c805786, 0x2303a652c9490718],
    [0x37073f4efb35fbdf, 0xbc5353eb110868d2, 0xc3f041f31dc45922, 0x27c53563b12a6ee2],
    [0x2c278f22615d2b0e, 0x9969b5248cfe90f4, 0xf02bd82d0a510904, 0x1201a87eaf4ae618],
    [0x6cb4b43dab2a443d, 0xcafcb1ba2c51e570, 0xad8214997bb069be, 0x2c43169439fcd69e],
    [0x4fb9847e6304d944, 0x4f46cbb36d702e3c, 0xea03c45d6984c689, 0x0683597315359040],
    [0x77795ad3a798d183, 0xb0425e158314197b, 0xafb93b128febd16f, 0x03545706706eab36],
    [0xedb393b71a0c0e6b, 0x740bed23a6a37870, 0xd35f1fc051b31728, 0x1a33c254ec117619],
    [0xf338e517f1690c78, 0x6e88f71e759b87e6, 0x67b0c002281caf99, 0x1ffe6968a4470cd5],
    [0x107f4e02e355b393, 0x140ddd5d2a5c4483, 0xecb059c899fd80f4, 0x0fd66e03ba8808ff],
    [0x7be3396b7fe013ab, 0x6c8617a7bdd5d74a, 0x197394552906b17e, 0x263ab69f13b966f8],
    [0x6eb7e03e39ba4046, 0x3bd87d5aa3958fdd, 0x5054d5a165de413e, 0x16a425e47d111062],
    [0xfcc5f73af9138d9a, 0x53cc31d13e39e909, 0xad752f03c673f0e2, 0x2dc510a4719ec10c],
    [0xcb4aa709a94576e5, 0x423c5179329b7a82, 0x1bd1cad23d07dda3, 0x24df8e8d856c5b5e],
    [0xbdf24a6cdce5620f, 0x7628249a01b09561, 0x3cd5c68915a042e8, 0x2bcc94ff4fc3c76f],
    [0xb48be86852da97df, 0xd3295f52c38cffe6, 0x8de54e343df7c429, 0x076c1e88dc540c8d],
    [0xa990fb8e12cb46e1, 0xe40ee1601120947d, 0x1c051fb12d9a5e4f, 0x09b5f209a451ac43],
    [0x0683af75eb677c07, 0x64e9424f55b0f1ea, 0xaa88d6a44135a6ab, 0x205f17b0d8729e2e],
    [0x0cdd1edf9f237029, 0x091681f0a4176172, 0x912638c38be046cd, 0x281c5c688836f6cf],
    [0x4afa44f2592621f5, 0x009a44e7a02ea50e, 0x5f4d67448c471cf3, 0x1a053e6878e900f4],
    [0x81742839d59e064c, 0x68efcb897e7bbee9, 0x07fb7ceac84e4f54, 0x100dc7d426debe30],
    [0x0b1cb31b411e49c8, 0xb28905bdb62c82c8, 0xbb87e2cfadc8b75f, 0x17022672a016a957],
    [0xe0c27203f954f4d2, 0x9fb8b547182b170d, 0x71053a87ebe15123, 0x1086db7e2760fc8b],
    [0xb85dd24fd7584064, 0x2b41fb65a185536f, 0x02460ae4c2942fac, 0x15384fe39d73b633],
    [0x519e551357709008, 0x47b1a853205fcfb5, 0x4bf4abc5342c6c74, 0x2ebb599fe9136d42],
    [0xd996fac6f4d37288, 0x4cf278292b4ce3ee, 0xfec3c0f0542e4c5a, 0x1b4b5e87cfb9262c],
    [0xb637febe659e5057, 0xbb4a7581bb4fba60, 0x801f3f82e302cafb, 0x2465053ae50b6885],
    [0x6e0ab9d3d54859ef, 0xda9f05e18b3708bf, 0x095c5bb5d38f1b97, 0x114f32edcdea09cd],
    [0xee28d8c2543c7148, 0x2e5e5519f3d18123, 0x6b387cd77be779ac, 0x2bc70dfeb2baab2f],
    [0x12e49bfe32c05415, 0xa78348b9f6ec68a4, 0x775e3a61ad7e77b6, 0x01c9bf7a203ce22b],
    [0x9f4ad00ccb57ee9b, 0x55cfb575ff6a97cd, 0x7bedb0295fbbcec3, 0x0514b0fe5909ea88],
    [0x03e3202d7b6c1b7e, 0x2092520b12a201af, 0x1a132a8b058910a1, 0x267c76ec81934cc8],
    [0xfb151cf757bde5d6, 0xf1622493ce83e95c, 0xc78c84babbb470ad, 0x29170e3322b3d8d5],
    [0x36dd596ca41d9519, 0x5c6f09a45486cab5, 0xaf33e5d3873f9c33, 0x019f6a8124b19e33],
    [0x5405d036242b60e9, 0x009ed8ea171518ae, 0x8b348e9db1981c27, 0x1904aa4d6908544a],
    [0x3b932a476455ff1a, 0xb3cee1de9dd6f647, 0xf7f043956694e422, 0x26f17873949bc679],
    [0xbdcac9b18bc48f75, 0x40c476031197131e, 0x193b33720b8aa540, 0x1ac668f612b8243c],
    [0xa52f81568ef0663d, 0xccfbf8555be9796d, 0x196dae45bf624766, 0x0996d961a75c0d07],
    [0x5425b395c24fc819, 0x74d171f99c63febb, 0xfd50d1b4383fbe66, 0x030c97e1b8cad1d4],
    [0xee226f2d8bd0848f, 0xb3e523f1fe502642, 0x3953370255b68f89, 0x06e3ad6a46900e2d],
    [0xa329890588cc916e, 0x65cb94b0e0455153, 0x6b6880e42f9880f5, 0x1d6b3755331cd021],
    [0x3dd38c08bae531f2, 0xc35189dc0b85ac03, 0x59b041535e730ac8, 0x28e4dcba4b96f12a],
    [0x7a3b3e4bc4a47a14, 0xb0712a476260376c, 0x8ccf484f2974b6a6, 0x08b6086046a83550],
    [0x89643e15b9bb3b52, 0xb6fd85fba6a0536a, 0x444bcec97812019b, 0x162cd2ca7fe3b5f1],
    [0x998c01c64d483a76, 0xb5c9a9c1192063d1, 0x05af5b11937e4f5c, 0x28f1e03baaea9bbc],
    [0x6031a0bb6791ce10, 0x0127d2aab4aa7136, 0xa395af2734c25faa, 0x1bdb062778d7c15d],
    [0x50329ebdd24749cb, 0x0fc98870b2324a8b, 0xcb2914e829627e0e, 0x2375839502e09890],
    [0xe92d33611ed7bb50, 0x332dc87cfb2df456, 0xad7c55668dc9423a, 0x1fa8662fbcb61fb3],
    [0x3f7f9736079d7694, 0x46e2fb2c47a5138f, 0xf8707f721716c8a4, 0x1e4fad2dd6b0a6f1],
    [0x61b0f5f13731ffe7, 0xba3bd050059f53d2, 0x6df6f5fcdd1fa788, 0x211256d16c7269fd],
    [0xf4a1079b12bcc5a5, 0xf42060e574dda341, 0x4f8e2a2e6af08318, 0x2e49084b336eceaa],
    [0x758d25891fb00bb9, 0x1aecea08dfe14cab, 0x3bf35192ac680821, 0x0ce19f54cdc39f7f],
    [0x84a8468bab2c14cb, 0x8dc60451e4ae4e1c, 0x3cc394221261d874, 0x0011c5d56c390e89],
    [0x14a8cd8051579b4c, 0xca60e17bfa39b475, 0x8a9e05ee6af3dbb7, 0x17d79ff06b63ac2a],
    [0xcab00173639015fa, 0xb1a8b35cd6416a2e, 0xdc74560093592b06, 0x19a7d3a446cb5393],
    [0xaa6c3c97237037a6, 0x31f04596d8928da7, 0x2a808b2e1b9282f3, 0x030c00a0933dcdba],
    [0x9370be8aab64139c, 0x935d2d00184c4acc, 0xae25ad080695382e, 0x16bcb447ce2d50f3],
    [0x39255b7cd66feb1d, 0xe62124f37cab7b6d, 0x5ea4ec8715312997, 0x12341b46b0150aa2],
    [0xdc89212db6a49ff4, 0x002fc28e296d1044, 0xb72a97b2bf610c84, 0x0e86d13917f44050],
    [0xd059025b110c7262, 0x1052a181f8f2eb14, 0xd357e00b53d7f30d, 0x08e6eb4089d37d66],
    [0xe10c48ce97ca7b18, 0x0415ccb351a1e0ce, 0x4738d15dd1481a0c, 0x2ea123856245f6c8],
    [0x664db0f9c84dfa6f, 0x4195789025413abf, 0x3446e00330b16310, 0x2dca72b2ebcab8c2],
    [0xc64a26cbd42b6a6b, 0xf2f6b4235f036fa4, 0x63329f585ec924b3, 0x06ff9ed50d327e84],
    [0xc630a4535afbf730, 0xe2a60e0cca84ea2a, 0x47f7c9bda3d54df8, 0x246a10b7e3e00899],
    [0x5c96b39d688b6691, 0x2f846a715ae67ad7, 0x18719ed99d700ee5, 0x22a63501c5f04b90],
    [0x40ec07e514fae937, 0xb9164f58351d8aa1, 0x71799ac5d2e224cd, 0x2f4c50477f7fd9c6],
    [0x0cda32cad851567e, 0x38f0ba8a4a23d4b5, 0x13b17f4d876d9a1e, 0x10ffb7aad1f51c7d],
    [0x1a056935c35803ae, 0x784027352187e7af, 0xa4d39722532d5420, 0x0e9cefddc3c2d3be],
    [0xa3e83bdd4ba62b41, 0xa1656f96a33c8978, 0xc23352e6dc6ea4af, 0x07af84a4d3141e7a],
    [0xe940f3ec8a22c3c5, 0x1a39323d6e89b638, 0xf8de00d14b1e566d, 0x2d9e31a10aebc761],
    [0x7656747be27e64c7, 0xd36034b314dad844, 0x33db1afd592f66f1, 0x27f19a6532e66b53],
    [0x7e4d617d47d07ffd, 0x180ed99f8f3155cd, 0x54b2024c3b4a577a, 0x0058fa3c8454d633],
    [0x708964956816a5d5, 0xb0414a205d3a175d, 0x67957c080699343e, 0x041627b6715b7809],
    [0x89888f12b727c52d, 0xd98201471cf1f665, 0x7f632e57b958ccec, 0x006ac49dd9253edc],
    [0xec46a6bf18301398, 0xec0c9c0d6d25a9a4, 0xb1d8c3616bbe3386, 0x0131adffd8bd7254],
    [0xcf030e1cd8f9f5b6, 0x77977ad7e25e49a3, 0x4138e413ef62a283, 0x1c4a6f52c9fccf7a],
    [0xd1f7958d2c2645f6, 0xfee048ae2078aeb7, 0x946551b3860ea479, 0x03f2a6be51ec677f],
    [0x4d7376396b8ddc62, 0x8a1372d854311956, 0x391a0cb78ef3a964, 0x2da770aad2c2eb09],
    [0x38062afb75d64a03, 0xc9d45fe866c359c7, 0xdc1802febfab02ce, 0x15278463665f74cd],
    [0x8d580638ac54c773, 0x34e38ea966a08a6f, 0xc9731027090518d4, 0x12fe278aa36544ea],
    [0x21b06ff30b6a23b6, 0xd8587604ca4f0d6e, 0x4c45d119d3f4cc7f, 0x149b9c802182558a],
    [0x0adc4959b691dfe4, 0x55e044fd60dbac9a, 0x17d19319772f3c98, 0x0812e7b4d847bc85],
    [0x2a66973703a0c61b, 0x555813c7e7503aea, 0xd8df7f28a0bfaa7f, 0x02ed8d8ddeafe3d9],
    [0xa1304038662d4db8, 0x55e5e4d9a03d6b6b, 0x4deb6029f921029e, 0x0ebd073ba0537b51],
    [0x44ee75b62eff9f59, 0x55b3e792c6afa08b, 0x05c6ba8d2ccd0282, 0x15c754d5b14b2c42],
    [0xc29e7cbc30e8732a, 0x1cc1235270f4cbc5, 0xb0ed8fa6fa311b39, 0x169515c89ac5479d],
    [0x6d9161f5cd9a4fef, 0x08bdc29f6ff03769, 0x2388f26210011016, 0x25479fbfb3a68f98],
    [0xce09486e94be6071, 0xa7f8e6e972182196, 0x3c852cb0311a578c, 0x14475c4bd520451f],
    [0x5c4e73363d097799, 0xd3a847502aec8d5f, 0xc9baf2798833a1df, 0x045a691066cc66be],
    [0x013b8bcb37eba683, 0x147a8ca037221b90, 0xb833ac8a11e3a3f0, 0x26029c0c267c799f],
    [0xb8101d5b948d1641, 0x73ce12a6a94a3e45, 0xf7c946969c1c2608, 0x163facb34ff572fb],
    [0xaf8ee00c4240ee28, 0x13e06a6275e58688, 0x1d969320cc69d5ec, 0x2c714e96e1913b35],
    [0xd52b804eff1d5fa6, 0xddd6268f06debfe2, 0x5aba84665ecd2bf9, 0x1c1661e2a7ce74b7],
    [0xa8c3c068b7dc2c71, 0x6635b34c2a0889fe, 0x5e5af3e6619a47d2, 0x06a69ae795ee9bfe],
    [0x31416c85d731d46a, 0x74dbdbadf54195c7, 0xc5d28b4c19a36093, 0x113d58535d892115],
    [0x2ca1a74063b46101, 0xe534f1ff47f7917a, 0x38ff97d761da6042, 0x2ab89102e2b8d5e6],
    [0x39804fd6a15ad1b3, 0x349031893da2b4fd, 0x962730c45e699546, 0x03c11ca79e41fdfe],
    [0x6adf040faaf2669c, 0xf7f67b4d4cfe846c, 0x88014ddbbbfc9da1, 0x27096c6726214038],
    [0xaa9dc2b57ef5be0d, 0x66db790ce486130c, 0xd504d4deeb53b13c, 0x2de32ad15497aef4],
    [0x255754448eefd001, 0x28c738dddaec9f3d, 0xfd5d341310722a2d, 0x0dc108f2b0a280d2],
    [0x7d34ca50365d832f, 0xbcdc3eebc409be7c, 0xc96858a1bb9efad5, 0x1869f3b763fe8164],
    [0x8c6d33767129682d, 0xb616945e16a568d4, 0xf82559fe6a911843, 0x022ed3a2d9ff31cb],
    [0x10c6aec077d026bc, 0x92fca1f27c19c266, 0x3944ed1365bd0e72, 0x2155d6005210169e],
    [0x3ea5928c8caeae85, 0xec0c0556c91af3db, 0xcae93263f5f1b4bb, 0x0de1ba7a562a8f7a],
    [0x6351dfa7da902563, 0x126f740bce8d637b, 0xcfce5bf46ec7da38, 0x05dbb4406024beab],
    [0xc97e5427a368fd5e, 0x00e789e3fcd72dcc, 0xd4d8dc8ad778d32c, 0x05d4149baac413be],
    [0x9212e22172c27b2e, 0xf0b6802fa941c787, 0x9be5046e7397e76f, 0x01cdf8b452d97c2b],
    [0x1b0a22279d46c07c, 0xc4d7c5015eced8c7, 0xaf8085ff81adce33, 0x1fc6a71867027f56],
    [0x568e0fda96aaafc2, 0xa9e185b75306d9c3, 0x5d4d59a5a7a3a42b, 0x1040bef4c642d034],
    [0xa8081475ab8fad0d, 0x2b21e95676431918, 0xff2c91b289334a4d, 0x16b79c3a6bf316e0],
    [0x3cbe1cdcd59f474e, 0xa34070e52b601fc1, 0x434b3a1387e3c8c6, 0x20dff1bc30f6db6b],
    [0xdfb7fd8512ae060d, 0x062dd4171a726a8b, 0xc254955030a970f8, 0x0212ac2ab7a6eaae],
    [0x13c8119f6996ae09, 0xb02dc03134f00442, 0x869a109c9215637c, 0x2f29377491474442],
    [0x5837d9f32d814bfa, 0x73be9f3866aa284c, 0x25ec93c33fea6032, 0x0984ca6a5f9185d5],
    [0xeb0ee9294b24f028, 0xe491361c8a6bd19c, 0x0d299bd6fa81220d, 0x0d080a6b6b3b6070],
    [0xce929ed7c85a4544, 0x21acc85b6400264d, 0x6789530638cb0ad8, 0x0e65cd99e84b052f],
    [0x55975da12736920b, 0xe30e3d20380ff6a6, 0x4808f72c716cd05e, 0x2e208875bc7ac122],
    [0x4a60d1aa8592bad5, 0xae2e3b894afd29f6, 0x76a0b0ff3d7dfac1, 0x2989f3ae477c2fd3],
    [0x3a74c3cea7189459, 0x918106a463290a3e, 0x9222d101e6fac0ce, 0x11361ce544e94137],
    [0x34c8bd05a2061438, 0xd122a822b8fb366c, 0xa539e10c173f6a75, 0x1e8d014b86cb5a7d],
    [0x212ee2c28ee98733, 0xa0c2324167ef6c91, 0x7ba812ad29558e23, 0x173f65adec8deee2],
    [0x991bd695310eddd9, 0x5da5df7ad45499d0, 0xafee8bd0c779ac3e, 0x01c36daaf9f01f1b],
    [0x4a6f5741f381e562, 0xf277d1a3f2fc8994, 0xaa9ab1c485bb85ff, 0x1353acb08c05adb4],
    [0x20f1c87a3b064d34, 0x009d33deb4f93aeb, 0x1860e71ea1188ee4, 0x2e5abd2537207cad],
    [0x421726ba8f69455c, 0x13deb4eb34913a13, 0xd02eedbb7ab85625, 0x191d5c5edaef42d3],
    [0xee7939dd2dcd089e, 0x82a04c74c127de9d, 0x82a263fea6d7599d, 0x11d7f8d1f2692642],
    [0x1bad085286cac971, 0x3445cb4cd6bc6f95, 0x90f79ad5e6799797, 0x04218fde366829ed],
    [0x27b71c730d76d6dd, 0x027b73b489301c32, 0x048397ca5f47a202, 0x0070772f7cf52453],
    [0xc1dc04dbe3d2b861, 0x67681a98cd051634, 0xc865b065687a1d9b, 0x038a389baef5d9a7],
    [0xf19860789015a6e5, 0x0f39d00966a50bea, 0xcda446b2b4b59ccd, 0x09a5eefab8b36a80],
    [0x9d16212c7584cd8c, 0x3d9ec99edfacb748, 0xb969c145109b4b58, 0x01b588848b8b47c8],
    [0xfed91e30d42954a6, 0x545e5abfa323d817, 0x6e1af6dfc3341419, 0x0b846e4a390e560f],
    [0x85cabfe85ce72fe3, 0xeb1513bc394fc4f9, 0x0d43a02ddb900040, 0x23a6679c7d9adb66],
    [0xf72f31d6fe089254, 0x4c3402fb7c85eccc, 0x3e5caa35f1351e9f, 0x2e0374a699197e34],
    [0x37d41913a7a27b48, 0x4b8cc0b1176bb9ec, 0x7f7a08af4cde3ff6, 0x0752cd899e52dc4d],
    [0x99e2873dd7ae55a7, 0x0275142b664b802c, 0xc349a2b6d57397a5, 0x068f8813127299da],
    [0xb374330f2da202b5, 0x86872d04a295b5b8, 0x677574167434b3f9, 0x2ba70a102355d549],
    [0xb8609e70a0b50828, 0x09f9099b825dd289, 0xa334d1df03b55213, 0x2c467af88748abf6],
    [0x96d29e5763e8f497, 0xe3a52c2d1a319572, 0x01009a2b448ae881, 0x05c5f20bef1bd827],
    [0x3ac8c9fe61b73871, 0x0cd083a2c649d9f2, 0x842a381f6006e2c6, 0x0dc6385fdc567be5],
    [0xd255baa8114b369c, 0x0378d5b84150d25e, 0x19d49911b8670fa7, 0x142d3983f3dc7f7e],
    [0x00fa18c1b2df67bf, 0xf36f86a7a99aa35c, 0xfd7e6d98c96a0fa0, 0x29a01efb2f6aa894],
    [0xd2a1af04eb613a76, 0x0ab9e8afc64555b7, 0x38c4a5066644ec63, 0x0525ffee737d6051],
    [0xf177cf4238301dc8, 0x7e164f614910264e, 0xf076677ca0e82276, 0x1e807dca81d79581],
    [0xdba56082dbd8757c, 0x4c0223e0f733a52f, 0x93510816472474d3, 0x0385fb3f89c74dc9],
    [0xf558f337bab0ea01, 0xcfabd7016fd6ef1a, 0xe1a6298e53cae59f, 0x037640dc1afc0143],
    [0xb7e4c0de896074b4, 0x5fd56cf031da8050, 0xf12a6c5260829eee, 0x1341999a1ed86919],
    [0x7b244f65bed8ece7, 0x73afd642efdcc565, 0x56906d4bafb10ad7, 0x069eb075866b0af3],
    [0xea1909a619033696, 0xd2726101d3afaa02, 0x95b38e8e08b3e646, 0x171c0b81e62136e3],
    [0x5575107502acced8, 0xcbbdcb39bfe696f9, 0xb6eb55c311753e84, 0x2c81814c9453f51c],
    [0xe39b8a86a7c3a604, 0xb04b39032adca92c, 0xe3b33fadcf274b2a, 0x29d843c0415d35d9],
    [0xa7669cf3fae7728b, 0xd8e15ea5947f2cda, 0x8436bccdabb78750, 0x085d6a1070f3513d],
    [0x9e2a5cda412fc394, 0xdbf1dd4e6706b02c, 0x10a44ba665bf302c, 0x11820363ed541daa],
    [0x105840b751a16317, 0xdfd3150e05f1df5d, 0x02b60d61a83785bd, 0x201935a58f5c57fc],
    [0xcfed610e87c02e9a, 0x46794eedd686cd8e, 0xe27a952abd33a03d, 0x0a8c2820c56971aa],
    [0xd50dbc163a281877, 0x650b65ff33e6be1f, 0x04abd6d0bd7500b6, 0x180638ff301a64ca],
    [0x3e9b321a812dd36b, 0xf85ca8a937cfbec6, 0x044f97114a4158a3, 0x095c716266f1de59],
    [0x8d4087a497d73490, 0x83b618c5c1a68781, 0x20d86ffed6c7ca15, 0x17c31ea02fbc3783],
    [0xe4d50a77f192a91b, 0x3c17a9764ccd660d, 0x6a7227e4192d149d, 0x05b86c4bb8ef318b],
    [0xd6ce74ba986c7a7b, 0xab15f4a6ae0d237c, 0x6ff70d7ea2fde2c7, 0x265bc95df4a4c487],
    [0xd6c886d4715c7929, 0x08701739c5f5b4b3, 0xd9bbe48f5fef2f69, 0x24752b47bc6c6bc8],
    [0xe583b9324d974efe, 0x78d624b98da96ee5, 0xa0d86e527a964821, 0x14814a1e0f492a4e],
    [0xc7523bca906f00bd, 0x997c8e041d3cfb3d, 0xbd60577378f29381, 0x10def931073b6479],
    [0x1b4592c98610175f, 0xfa0b880d28c69d03, 0x7f706c0d8ab4ed03, 0x14f7ae770bf7e95f],
    [0x75c5cc9dce1ce589, 0x9decc9d428ebe4e7, 0x9f926af40e8035d1, 0x1aef50a0cee751b5],
    [0x951214b57e73cf5a, 0x086c2a2d57d09602, 0xba65ca60068dfe3b, 0x041935607172f68e],
    [0x37a151d3bf452cb8, 0x0493fbefe83c8198, 0x573bd083959b856c, 0x26863e9dd24255d1],
    [0x652738e63ff8b3af, 0xf5adf251ba62052c, 0xeb3d7a068bd087c9, 0x2036efb6f9830965],
    [0xb00fa4f1b4f4ee9b, 0x30be4f75a753f854, 0x766b639a029969ca, 0x0c712a975b74dc9d],
    [0x375731d387539699, 0x7afdff6456492ca3, 0x27afc99bfac1e680, 0x08014dab3cd1667e],
    [0xb53009f79b34e6a4, 0x97c4dd4d37b4e8f3, 0xa82a4a79839d6a2b, 0x198d07192db4fac2],
    [0xfd15784d1f63e572, 0x2709b29d53bb946d, 0xb23b4131426897a3, 0x29eb1de42a3ad381],
];

pub(crate) const MDS_T5: [[[u64; 4]; 5]; 5] = [
    [
        [0x4fc6fdbcf38d7da1, 0x9f22e57ace3cd7f6, 0x080b0af133b9e436, 0x251e7fdf99591080],
        [0x48550486e91c7765, 0xfe26ea9ca238d6e3, 0x47cbd3b1c17d97c7, 0x25fb50b65acf4fb0],
        [0x6ea1e31ed5767833, 0x6deb5325f367a455, 0x355f39ebf62f91b0, 0x293d617d7da72102],
        [0x6145f14ba6d3c1c4, 0x66599e575a9b7edf, 0x960111ac25da4743, 0x104d0295ab00c85e],
        [0x3ed5b90f2f69c977, 0x792b3813954fe9bf, 0x7dea3e336cd96a39, 0x0aaa35e2c84baf11],
    ],
    [
        [0x69f661b2eb74c839, 0x052903dc6609ea69, 0xc03e17c1d1dcdb02, 0x2a70b9f1d4bbccdb],
        [0x115b8e2e991ccd7a, 0xba9f92ad8ef4b979, 0x6315a9934f1b8a1b, 0x281154651c921e74],
        [0xb86a894f7db36c37, 0x8ccd8fdb9ee2b45f, 0x0b53c732134efa33, 0x28c2be2f8264f95f],
        [0xc4ec8fa75e530a13, 0x9b626d8cb4dc18dc, 0x6d427c890b1883bb, 0x21888041e6febd54],
        [0x350d65e2cbff4941, 0xe810930e3ea4574a, 0x80195b9592d8cf2b, 0x14ddb5fada0171db],
    ],
    [
        [0xa4fa8478970d401d, 0x55b91bff652ad69a, 0xdea43265306a37ed, 0x2f69a7198e1fbcc7],
        [0x6d6a3747594d3052, 0x67ba312b34140e71, 0xad931ab80e37bbb2, 0x001c1edd62645b73],
        [0xa7f9a4b228bfc32b, 0x39c40c603049466f, 0xce2f2c96c69663c4, 0x15b98ce93e47bc64],
        [0x65051de33163cf9c, 0xcba8458b28e44d92, 0x58f65be2fbac809f, 0x12c7e2adfa524e59],
        [0x531ec2de53bbd167, 0xaf67ce79816ef468, 0x49018222e7b8922e, 0x2efc2b90d6881348],
    ],
    [
        [0xf1afd6c5f721f830, 0x3c3ffa4550bd2514, 0x1981e55e3e1a29a1, 0x0c3f050a6bf5af15],
        [0xeda7784320a1a36e, 0x8b2efe2ecd424a73, 0xfa75ba7992bd34f0, 0x0dec54e6dbf75205],
        [0x7cc75cf32d8136fa, 0x98364a11f4d988fb, 0x20225815034b1960, 0x1c482a25a729f5df],
        [0xb8b607ae9fd8514a, 0x0812ac2fc9a14a5f, 0x52732624e4ab9436, 0x2625ce48a7b39a42],
        [0x9fb9f28af710251f, 0xed7ef8e300b9a8bb, 0x86f7cd4fd710c509, 0x07f017a7ebd56dd0],
    ],
    [
        [0xe2f78c2ccc2e3595, 0x7c5e55c20146259b, 0xf97c9d6186c6c3ea, 0x2a20e3a4a0e57d92],
        [0x403b01feb727a549, 0x701673aed820d9c4, 0xaafb1e9a5d63c0ee, 0x1049f8210566b51f],
        [0x61b9299b82d69c8e, 0xef357a69e3e86b55, 0x68002bd9d1b96b4b, 0x02ecac687ef5b4b5],
        [0xd4ebcf11bbe1e37b, 0xbdcb6b58ba40441e, 0x6808f88c9ba903d3, 0x2d3a1aea2e6d4446],
        [0xc98d803bfed65e64, 0xb39c4a7a72dbb6d9, 0xc9ad171e4f35fe49, 0x14074bb14c982c81],
    ],
];

