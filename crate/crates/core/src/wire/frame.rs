use tokio::io::{AsyncRead, AsyncReadExt, AsyncWrite, AsyncWriteExt};

use super::WireError;

pub const MAX_FRAME_LEN: usize = 1 << 20;

/// Reads one frame. The declared length is checked before any body byte is
/// read. A clean EOF before the header yields [`WireError::Closed`].
pub async fn read_frame<R: AsyncRead + Unpin>(r: &mut R) -> Result<Vec<u8>, WireError> {
    let mut header = [0u8; 4];
    match r.read_exact(&mut header).await {
        Ok(_) => {}
        Err(e) if e.kind() == std::io::ErrorKind::UnexpectedEof => return Err(WireError::Closed),
        Err(e) => return Err(e.into()),
    }
    let len = u32::from_be_bytes(header) as usize;
    if len > MAX_FRAME_LEN {
        return Err(WireError::FrameTooLarge(len));
    }
    let mut body = vec![0u8; len];
    r.read_exact(&mut body).await?;
    Ok(body)
}

pub async fn write_frame<W: AsyncWrite + Unpin>(w: &mut W, payload: &[u8]) -> Result<(), WireError> {
    if payload.len() > MAX_FRAME_LEN {
        return Err(WireError::FrameTooLarge(payload.len()));
    }
    w.write_all(&(payload.len() as u32).to_be_bytes()).await?;
    w.write_all(payload).await?;
    w.flush().await?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[tokio::test]
    async fn round_trip_and_limits() {
        let mut buf = Vec::new();
        write_frame(&mut buf, b"hello").await.unwrap();
        assert_eq!(&buf[..4], &[0, 0, 0, 5]);
        assert_eq!(read_frame(&mut buf.as_slice()).await.unwrap(), b"hello");

        let huge = ((2 * MAX_FRAME_LEN) as u32).to_be_bytes();
        assert!(matches!(read_frame(&mut &huge[..]).await, Err(WireError::FrameTooLarge(n)) if n == 2 * MAX_FRAME_LEN));
        assert!(matches!(read_frame(&mut &[][..]).await, Err(WireError::Closed)));
        assert!(matches!(read_frame(&mut &[0, 0, 0, 9, 1][..]).await, Err(WireError::Io(_))));

        let exact = vec![0u8; MAX_FRAME_LEN];
        let mut buf = Vec::new();
        write_frame(&mut buf, &exact).await.unwrap();
        assert_eq!(read_frame(&mut buf.as_slice()).await.unwrap().len(), MAX_FRAME_LEN);
        assert!(write_frame(&mut Vec::new(), &vec![0u8; MAX_FRAME_LEN + 1]).await.is_err());
    }
}
